"""Independent coalition partitions: verification and exact IC(G) / C(G).

An ic-partition is a vertex partition in which every class is either a
singleton dominating set (a full vertex) or an independent set that is not
independent dominating and forms an independent coalition with another
class.  Two disjoint independent sets form an independent coalition when
neither is independent dominating but their union is.

The solvers enumerate set partitions as restricted-growth strings: vertex
``v`` either joins one of the classes already opened by vertices ``< v``
or opens a new class.  For IC a vertex may only join a class it has no
neighbour in, which keeps every class independent during the search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .graph import CapacityError, Graph, VertexSet, iter_bits, members, vertex_set
from .invariants import dominated, is_dominating, is_independent

MAX_IC_ORDER = 12
MAX_COALITION_ORDER = 10

SINGLETON_DOMINATING = "singleton-dominating"
HAS_PARTNERS = "has-partners"
VIOLATION = "violation"

NOT_INDEPENDENT = "not-independent"
IDS_NON_SINGLETON = "independent-dominating-non-singleton"
NO_PARTNER = "no-partner"


class PartitionError(ValueError):
    """The classes given do not partition ``0..n-1``."""

    def __init__(self, message: str, *, missing=(), repeated=(), out_of_range=()):
        super().__init__(message)
        self.missing = tuple(missing)
        self.repeated = tuple(repeated)
        self.out_of_range = tuple(out_of_range)


@dataclass(frozen=True)
class Partition:
    """Vertex partition; each class is a vertex mask."""

    classes: tuple[VertexSet, ...]

    @classmethod
    def from_lists(cls, lists: Iterable[Iterable[int]]) -> "Partition":
        return cls(tuple(vertex_set(c) for c in lists))

    def as_lists(self) -> list[list[int]]:
        return [members(c) for c in self.classes]

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.classes)

    def __str__(self) -> str:
        return "|".join(",".join(map(str, c)) for c in self.as_lists())


def singleton_partition(g: Graph) -> Partition:
    return Partition(tuple(1 << v for v in range(g.n)))


def check_partition(g: Graph, p: Partition) -> None:
    """Raise :class:`PartitionError` unless ``p`` partitions ``V(g)``."""
    seen = 0
    repeated = 0
    outside = 0
    for c in p.classes:
        if not c:
            raise PartitionError("empty class")
        outside |= c & ~g.vertices
        repeated |= seen & c
        seen |= c
    missing = g.vertices & ~seen
    if outside or repeated or missing:
        parts = []
        if outside:
            parts.append(f"out of range {members(outside)}")
        if repeated:
            parts.append(f"repeated {members(repeated)}")
        if missing:
            parts.append(f"missing {members(missing)}")
        raise PartitionError(
            "not a partition of V: " + "; ".join(parts),
            missing=members(missing),
            repeated=members(repeated),
            out_of_range=members(outside),
        )


def _neighbourhood(g: Graph, s: VertexSet) -> VertexSet:
    out = 0
    for v in iter_bits(s):
        out |= g.adj[v]
    return out


def forms_ic(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    """Whether ``a`` and ``b`` form an independent coalition in ``g``."""
    if not a or not b:
        raise ValueError("coalition sets must be nonempty")
    if a & b:
        raise ValueError("coalition sets must be disjoint")
    if not (is_independent(g, a) and is_independent(g, b)):
        return False
    if _neighbourhood(g, a) & b:
        return False
    # for independent sets, independent dominating is the same as dominating
    if is_dominating(g, a) or is_dominating(g, b):
        return False
    return is_dominating(g, a | b)


@dataclass(frozen=True)
class ClassVerdict:
    kind: str
    partners: tuple[int, ...] = ()
    reason: Optional[str] = None

    def __str__(self) -> str:
        if self.kind == HAS_PARTNERS:
            return f"{self.kind} {list(self.partners)}"
        if self.kind == VIOLATION:
            return f"{self.kind}: {self.reason}"
        return self.kind


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    verdicts: tuple[ClassVerdict, ...] = field(default=())

    def violations(self) -> list[tuple[int, str]]:
        return [(i, v.reason) for i, v in enumerate(self.verdicts) if v.kind == VIOLATION]


def verify_ic_partition(g: Graph, p: Partition) -> VerifyReport:
    check_partition(g, p)
    classes = p.classes
    verdicts = []
    for i, c in enumerate(classes):
        dominating = is_dominating(g, c)
        if dominating and c.bit_count() == 1:
            verdicts.append(ClassVerdict(SINGLETON_DOMINATING))
        elif not is_independent(g, c):
            verdicts.append(ClassVerdict(VIOLATION, reason=NOT_INDEPENDENT))
        elif dominating:
            verdicts.append(ClassVerdict(VIOLATION, reason=IDS_NON_SINGLETON))
        else:
            partners = tuple(j for j, d in enumerate(classes) if j != i and forms_ic(g, c, d))
            if partners:
                verdicts.append(ClassVerdict(HAS_PARTNERS, partners))
            else:
                verdicts.append(ClassVerdict(VIOLATION, reason=NO_PARTNER))
    return VerifyReport(all(v.kind != VIOLATION for v in verdicts), tuple(verdicts))


def verify_c_partition(g: Graph, p: Partition) -> bool:
    check_partition(g, p)
    full = g.vertices
    dom = [dominated(g, c) for c in p.classes]
    return _c_valid(full, list(p.classes), dom)


def partner_counts(g: Graph, p: Partition) -> list[int]:
    report = verify_ic_partition(g, p)
    if not report.valid:
        raise ValueError(f"not an ic-partition: {report.violations()}")
    return [len(v.partners) for v in report.verdicts]


def _ic_valid(full: int, cls: Sequence[int], dom: Sequence[int], nbr: Sequence[int]) -> bool:
    # classes are independent by construction of the search
    k = len(cls)
    for i in range(k):
        di = dom[i]
        if di == full:
            if cls[i] & (cls[i] - 1):
                return False
            continue
        ni = nbr[i]
        for j in range(k):
            if j != i and dom[j] != full and not (ni & cls[j]) and (di | dom[j]) == full:
                break
        else:
            return False
    return True


def _c_valid(full: int, cls: Sequence[int], dom: Sequence[int]) -> bool:
    k = len(cls)
    for i in range(k):
        di = dom[i]
        if di == full:
            if cls[i] & (cls[i] - 1):
                return False
            continue
        for j in range(k):
            if j != i and dom[j] != full and (di | dom[j]) == full:
                break
        else:
            return False
    return True


def _explore(
    g: Graph,
    independent: bool,
    on_leaf: Callable[[list[int], list[int], list[int]], None],
    floor: Callable[[], int] = lambda: -1,
) -> None:
    """Walk restricted-growth partitions of ``V(g)``.

    ``on_leaf`` receives class masks with their closed and open
    neighbourhoods.  A branch is cut when even opening one new class per
    remaining vertex cannot exceed ``floor()``.
    """
    n = g.n
    adj = g.adj
    closed = [adj[v] | (1 << v) for v in range(n)]
    cls: list[int] = []
    dom: list[int] = []
    nbr: list[int] = []

    def place(v: int) -> None:
        if v == n:
            on_leaf(cls, dom, nbr)
            return
        if len(cls) + (n - v) <= floor():
            return
        bit = 1 << v
        cls.append(bit)
        dom.append(closed[v])
        nbr.append(adj[v])
        place(v + 1)
        cls.pop()
        dom.pop()
        nbr.pop()
        for i in range(len(cls)):
            if independent and nbr[i] & bit:
                continue
            c, d, a = cls[i], dom[i], nbr[i]
            cls[i], dom[i], nbr[i] = c | bit, d | closed[v], a | adj[v]
            place(v + 1)
            cls[i], dom[i], nbr[i] = c, d, a

    place(0)


@dataclass(frozen=True)
class ICResult:
    """Outcome of an IC computation: a value with witness, or no ic-partition.

    ``value is None`` means the graph has no ic-partition.  Closed-form
    predictions use the same shape with ``witness=None``.
    """

    value: Optional[int]
    witness: Optional[Partition] = None

    @property
    def exists(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        return "none" if self.value is None else str(self.value)


NO_PARTITION = ICResult(None, None)


def ic_number(g: Graph) -> ICResult:
    """Exact IC(g) with a witness partition, or ``NO_PARTITION``."""
    if g.n > MAX_IC_ORDER:
        raise CapacityError(f"solver bound exceeded: IC search supports order <= {MAX_IC_ORDER}")
    if g.n == 0:
        return NO_PARTITION
    full = g.vertices
    best: list[int] = []

    def leaf(cls, dom, nbr):
        if len(cls) > len(best) and _ic_valid(full, cls, dom, nbr):
            best[:] = cls

    _explore(g, True, leaf, lambda: len(best))
    if not best:
        return NO_PARTITION
    return ICResult(len(best), Partition(tuple(best)))


def iter_ic_partitions(g: Graph) -> Iterator[Partition]:
    """Every ic-partition of ``g`` (exhaustive; for small orders)."""
    if g.n > MAX_IC_ORDER:
        raise CapacityError(f"solver bound exceeded: IC search supports order <= {MAX_IC_ORDER}")
    full = g.vertices
    found: list[Partition] = []

    def leaf(cls, dom, nbr):
        if _ic_valid(full, cls, dom, nbr):
            found.append(Partition(tuple(cls)))

    if g.n:
        _explore(g, True, leaf)
    return iter(found)


def coalition_partition(g: Graph) -> Optional[Partition]:
    """A c-partition of maximum order, or ``None`` if none exists."""
    if g.n > MAX_COALITION_ORDER:
        raise CapacityError(
            f"solver bound exceeded: coalition search supports order <= {MAX_COALITION_ORDER}"
        )
    if g.n == 0:
        return None
    full = g.vertices
    best: list[int] = []

    def leaf(cls, dom, nbr):
        if len(cls) > len(best) and _c_valid(full, cls, dom):
            best[:] = cls

    _explore(g, False, leaf, lambda: len(best))
    return Partition(tuple(best)) if best else None


def coalition_number(g: Graph) -> Optional[int]:
    p = coalition_partition(g)
    return None if p is None else len(p)
