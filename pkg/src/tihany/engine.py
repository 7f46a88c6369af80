"""Tihany cliques: testing, minimal search, and executable lemma checks.

A clique K of size k is Tihany when removing it costs fewer than k colours,
that is when ``G \\ K`` is not (chi - k)-colourable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from .analysis import find_claw, find_clique_cutset, triad_masks
from .graph import (
    Graph,
    GraphError,
    bits,
    common_neighbors_mask,
    components_mask,
    from_mask,
    from_rows,
    induced_mask,
    is_clique_mask,
    to_mask,
)
from .analysis import is_antimatching_mask
from .solvers import (
    Budget,
    Coloring,
    Matching,
    Tracker,
    chromatic_number,
    clique_number,
    cliques_up_to,
    find_coloring,
    matching_number,
    maximum_matching,
)
from .solvers.budget import tracker_for
from .solvers.cliques import max_clique_mask

BudgetLike = Budget | Tracker | None


def _lift(coloring: Coloring, table: list[int]) -> Coloring:
    return Coloring(tuple(frozenset(table[v] for v in cls) for cls in coloring.classes))


@dataclass(frozen=True)
class ChromaticWitness:
    chi: int
    coloring: Coloring


def chromatic(g: Graph, budget: BudgetLike = None) -> ChromaticWitness:
    chi, col = chromatic_number(g, budget)
    return ChromaticWitness(chi, col)


@dataclass(frozen=True)
class TihanyCertificate:
    clique: frozenset[int]
    chi_before: int
    chi_after: int
    # optimal colouring of G \ K, in the ids of G
    coloring_after: Coloring

    def holds(self) -> bool:
        return self.chi_after >= self.chi_before - len(self.clique) + 1


@dataclass(frozen=True)
class TihanyRefutation:
    clique: frozenset[int]
    chi_before: int
    # a (chi - |K|)-colouring of G \ K, in the ids of G
    coloring: Coloring


def _require_clique(g: Graph, k: Iterable[int]) -> int:
    kmask = to_mask(k)
    if kmask & ~g.full:
        raise GraphError("clique leaves the vertex range")
    if not is_clique_mask(g, kmask):
        raise GraphError("K is not a clique")
    return kmask


def is_tihany(
    g: Graph,
    k: Iterable[int],
    budget: BudgetLike = None,
    chi: int | None = None,
) -> TihanyCertificate | TihanyRefutation:
    kmask = _require_clique(g, k)
    if chi is None:
        chi = chromatic_number(g, budget)[0]
    size = kmask.bit_count()
    rest, table = induced_mask(g, g.full & ~kmask)
    target = chi - size
    col = find_coloring(rest, max(target, 0), budget) if target >= 0 else None
    if col is not None:
        return TihanyRefutation(from_mask(kmask), chi, _lift(col, table))
    after, best = chromatic_number(rest, budget, lower=target + 1)
    return TihanyCertificate(from_mask(kmask), chi, after, _lift(best, table))


RefutationHook = Callable[[Graph, TihanyRefutation], None]


def find_min_tihany(
    g: Graph,
    kmax: int = 5,
    budget: BudgetLike = None,
    kmin: int = 1,
    chi: int | None = None,
    on_refutation: RefutationHook | None = None,
) -> TihanyCertificate | None:
    """Smallest Tihany clique with ``kmin <= |K| <= kmax``.

    Cliques are tried by size, then lexicographically, so the answer is
    deterministic.  ``on_refutation`` sees every colouring that rules a
    clique out, which is how the colour-class property gets audited.
    """
    if kmax < 1 or kmin < 1:
        raise ValueError("clique sizes start at 1")
    if chi is None:
        chi = chromatic_number(g, budget)[0]
    for clique in cliques_up_to(g, kmax, min_size=kmin):
        verdict = is_tihany(g, clique, budget, chi=chi)
        if isinstance(verdict, TihanyCertificate):
            return verdict
        if on_refutation is not None:
            on_refutation(g, verdict)
    return None


@dataclass(frozen=True)
class CliqueClass:
    dense: bool
    good: bool
    common: frozenset[int]
    s_f: frozenset[int]


def _pair_partner(f: Iterable[Iterable[int]]) -> dict[int, int]:
    partner: dict[int, int] = {}
    for pair in f:
        x, y = tuple(pair)
        if x == y or x in partner or y in partner:
            raise GraphError("F pairs must be disjoint 2-sets")
        partner[x] = y
        partner[y] = x
    return partner


def s_f(g: Graph, k: Iterable[int], f: Iterable[Iterable[int]] = ()) -> frozenset[int]:
    """Partners x of some k in K with x a common neighbour of K minus k."""
    kmask = to_mask(k)
    partner = _pair_partner(f)
    out = set()
    for v in bits(kmask):
        x = partner.get(v)
        if x is None:
            continue
        if common_neighbors_mask(g, kmask & ~(1 << v)) >> x & 1:
            out.add(x)
    return frozenset(out)


def classify_clique(g: Graph, k: Iterable[int], f: Iterable[Iterable[int]] = ()) -> CliqueClass:
    kmask = _require_clique(g, k)
    common = common_neighbors_mask(g, kmask)
    return CliqueClass(
        dense=is_clique_mask(g, common),
        good=is_antimatching_mask(g, common),
        common=from_mask(common),
        s_f=s_f(g, from_mask(kmask), f),
    )


def complete_to_clique_per_class(
    g: Graph, kmask: int, coloring: Coloring
) -> list[tuple[frozenset[int], int | None]]:
    """For each colour class, its lowest vertex complete to K (or None)."""
    common = common_neighbors_mask(g, kmask)
    out = []
    for cls in coloring.classes:
        hits = to_mask(cls) & common
        out.append((cls, (hits & -hits).bit_length() - 1 if hits else None))
    return out


@dataclass(frozen=True)
class BasicCheck:
    status: str  # "ok", "vacuous" or "violation"
    witnesses: tuple[tuple[frozenset[int], int | None], ...] = ()
    coloring: Coloring | None = None


def audit_refutation(g: Graph, refutation: TihanyRefutation) -> BasicCheck:
    kmask = to_mask(refutation.clique)
    pairs = complete_to_clique_per_class(g, kmask, refutation.coloring)
    status = "ok" if all(w is not None for _, w in pairs) else "violation"
    return BasicCheck(status, tuple(pairs), refutation.coloring)


def check_lemma_basic(g: Graph, k: Iterable[int], budget: BudgetLike = None) -> BasicCheck:
    verdict = is_tihany(g, k, budget)
    if isinstance(verdict, TihanyCertificate):
        return BasicCheck("vacuous")
    return audit_refutation(g, verdict)


@dataclass(frozen=True)
class GEDecomposition:
    d: frozenset[int]
    a: frozenset[int]
    c: frozenset[int]
    matching: Matching
    mu: int
    components_of_d: int


def gallai_edmonds(g: Graph) -> GEDecomposition:
    matching = maximum_matching(g)
    mu = matching.size
    d = 0
    for v in range(g.n):
        sub, _ = induced_mask(g, g.full & ~(1 << v))
        if matching_number(sub) == mu:
            d |= 1 << v
    nd = 0
    for v in bits(d):
        nd |= g.rows[v]
    a = nd & ~d
    c = g.full & ~d & ~a
    comps = len(components_mask(g, d)) if d else 0
    if g.n + a.bit_count() - comps != 2 * mu:
        raise RuntimeError("matching deficiency identity failed")
    return GEDecomposition(from_mask(d), from_mask(a), from_mask(c), matching, mu, comps)


def _validate_separation(g: Graph, kmask: int, amask: int, bmask: int) -> None:
    if kmask & amask or kmask & bmask or amask & bmask:
        raise GraphError("separation parts overlap")
    if kmask | amask | bmask != g.full:
        raise GraphError("separation parts do not cover the vertices")
    if not amask or not bmask:
        raise GraphError("both sides of the separation must be nonempty")
    if not is_clique_mask(g, kmask):
        raise GraphError("cutset is not a clique")
    for v in bits(amask):
        if g.rows[v] & bmask:
            raise GraphError(f"vertex {v} has neighbours across the cutset")


def merge_cutset_colorings(
    g: Graph,
    k: Iterable[int],
    a: Iterable[int],
    b: Iterable[int],
    budget: BudgetLike = None,
) -> Coloring:
    """Optimal colourings of both sides, renamed to agree on K, then glued."""
    kmask, amask, bmask = to_mask(k), to_mask(a), to_mask(b)
    _validate_separation(g, kmask, amask, bmask)
    sides = []
    for side in (amask, bmask):
        sub, table = induced_mask(g, side | kmask)
        _, col = chromatic_number(sub, budget)
        sides.append(_lift(col, table))
    big, small = sorted(sides, key=lambda c: -c.k)
    big_of = big.color_of()
    small_of = small.color_of()
    # classes of the smaller side: those holding a K vertex follow it, the rest
    # fill the remaining slots in order
    rename: dict[int, int] = {}
    for v in bits(kmask):
        rename[small_of[v]] = big_of[v]
    free = [i for i in range(big.k) if i not in rename.values()]
    for cls in range(small.k):
        if cls not in rename:
            rename[cls] = free.pop(0)
    merged = [set(c) for c in big.classes]
    for cls_index, cls in enumerate(small.classes):
        merged[rename[cls_index]].update(cls)
    return Coloring(tuple(frozenset(c) for c in merged))


@dataclass(frozen=True)
class WJoin:
    a: frozenset[int]
    b: frozenset[int]
    reduced: bool
    partition: tuple[frozenset[int], frozenset[int], frozenset[int], frozenset[int]] | None = None


def wjoin_status(g: Graph, a: Iterable[int], b: Iterable[int]) -> WJoin | None:
    """The W-join (a, b) with its reduced split, or None if (a, b) is not one."""
    amask, bmask = to_mask(a), to_mask(b)
    if not amask or not bmask or amask & bmask:
        return None
    if not is_clique_mask(g, amask) or not is_clique_mask(g, bmask):
        return None
    for v in bits(g.full & ~amask & ~bmask):
        for side in (amask, bmask):
            hit = g.rows[v] & side
            if hit and hit != side:
                return None
    cross = sum((g.rows[v] & bmask).bit_count() for v in bits(amask))
    if cross == 0 or cross == amask.bit_count() * bmask.bit_count():
        return None
    a1 = to_mask(v for v in bits(amask) if g.rows[v] & bmask)
    b1 = to_mask(v for v in bits(bmask) if g.rows[v] & amask)
    reduced = all((g.rows[v] & b1) == b1 for v in bits(a1))
    split = None
    if reduced:
        split = (from_mask(a1), from_mask(amask & ~a1), from_mask(b1), from_mask(bmask & ~b1))
    return WJoin(from_mask(amask), from_mask(bmask), reduced, split)


def _close_wjoin(g: Graph, amask: int, bmask: int) -> tuple[int, int] | None:
    # A vertex mixed on A cannot join the clique A, so it is forced into B,
    # and symmetrically; the closure is therefore unique.
    while True:
        moved = False
        for v in bits(g.full & ~amask & ~bmask):
            hit_a = g.rows[v] & amask
            hit_b = g.rows[v] & bmask
            mixed_a = hit_a and hit_a != amask
            mixed_b = hit_b and hit_b != bmask
            if mixed_a and mixed_b:
                return None
            if mixed_a:
                if hit_b != bmask:
                    return None
                bmask |= 1 << v
                moved = True
            elif mixed_b:
                if hit_a != amask:
                    return None
                amask |= 1 << v
                moved = True
        if not moved:
            return amask, bmask


def find_nonreduced_wjoin(g: Graph) -> WJoin | None:
    """A non-reduced W-join, found from a 2x2 seed inducing 2K2 or P4 across."""
    rows = g.rows
    edges = list(g.edges())
    for a, a2 in edges:
        for b, b2 in edges:
            if len({a, a2, b, b2}) < 4 or (b, b2) <= (a, a2):
                continue
            cross = [
                rows[a] >> b & 1, rows[a] >> b2 & 1,
                rows[a2] >> b & 1, rows[a2] >> b2 & 1,
            ]
            total = sum(cross)
            induced_2k2 = total == 2 and cross[0] == cross[3]
            if total != 3 and not induced_2k2:
                continue
            closed = _close_wjoin(g, (1 << a) | (1 << a2), (1 << b) | (1 << b2))
            if closed is None:
                continue
            w = wjoin_status(g, from_mask(closed[0]), from_mask(closed[1]))
            if w is not None and not w.reduced:
                return w
    return None


class ReductionFailed(RuntimeError):
    pass


def _with_block(g: Graph, amask: int, bmask: int, a1: int, b1: int) -> Graph:
    rows = list(g.rows)
    for v in bits(amask):
        rows[v] &= ~bmask
        if a1 >> v & 1:
            rows[v] |= b1
    for v in bits(bmask):
        rows[v] &= ~amask
        if b1 >> v & 1:
            rows[v] |= a1
    return from_rows(rows)


def reduced_block_candidates(
    a: list[int], b: list[int], below: int
) -> list[tuple[int, int]]:
    """Complete blocks A1 x B1 (proper and nonempty) with fewer than ``below``
    edges, by decreasing edge count, then larger A1, then lexicographically."""
    out = []
    for i in range(1, len(a) + 1):
        for a1 in combinations(a, i):
            for j in range(1, len(b) + 1):
                if i == len(a) and j == len(b):
                    continue
                if i * j >= below:
                    continue
                for b1 in combinations(b, j):
                    out.append((i * j, a1, b1))
    out.sort(key=lambda t: (-t[0], -len(t[1]), t[1], t[2]))
    return [(to_mask(a1), to_mask(b1)) for _, a1, b1 in out]


def reduce_wjoin(g: Graph, w: WJoin, budget: BudgetLike = None) -> Graph:
    """Replace the cross pattern of a non-reduced W-join by a complete block
    with fewer edges, keeping claw-freeness and the chromatic number."""
    current = wjoin_status(g, w.a, w.b)
    if current is None or current.reduced:
        raise GraphError("input pair is not a non-reduced W-join")
    amask, bmask = to_mask(w.a), to_mask(w.b)
    cross = sum((g.rows[v] & bmask).bit_count() for v in bits(amask))
    chi = chromatic_number(g, budget)[0]
    was_claw_free = find_claw(g) is None
    for a1, b1 in reduced_block_candidates(sorted(w.a), sorted(w.b), cross):
        h = _with_block(g, amask, bmask, a1, b1)
        if was_claw_free and find_claw(h) is not None:
            continue
        # the block may add cross pairs, so check chi(h) from both sides
        if chi >= 1 and find_coloring(h, chi - 1, budget) is not None:
            continue
        if find_coloring(h, chi, budget) is None:
            continue
        return h
    raise ReductionFailed("no reduced pattern keeps the chromatic number")


MAX_ELT_VERTICES = 16


@dataclass(frozen=True)
class EltPartition:
    s_side: frozenset[int]
    t_side: frozenset[int]
    s: int
    t: int


def elt_partition_exists(
    g: Graph, s: int, t: int, budget: BudgetLike = None
) -> EltPartition | None:
    """Split V into S, T with chi(G|S) >= s and chi(G|T) >= t.

    Only inclusion-minimal S need testing (shrinking S only grows T), and
    subsets are visited by size, so any S containing an earlier qualifying
    set is skipped.
    """
    if s < 2 or t < 2:
        raise ValueError("s and t must be at least 2")
    if g.n > MAX_ELT_VERTICES:
        raise GraphError(f"partition search is limited to {MAX_ELT_VERTICES} vertices")
    tracker = tracker_for(budget)
    memo: dict[tuple[int, int], bool] = {}

    def at_least(mask: int, bound: int) -> bool:
        key = (mask, bound)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if mask.bit_count() < bound:
            out = False
        elif max_clique_mask(g, mask).bit_count() >= bound:
            out = True
        else:
            sub, _ = induced_mask(g, mask)
            out = find_coloring(sub, bound - 1, tracker) is None
        memo[key] = out
        return out

    minimal: list[int] = []
    for size in range(s, g.n - t + 1):
        for combo in combinations(range(g.n), size):
            tracker.tick()
            smask = to_mask(combo)
            if any(smask & m == m for m in minimal):
                continue
            if not at_least(smask, s):
                continue
            minimal.append(smask)
            tmask = g.full & ~smask
            if at_least(tmask, t):
                return EltPartition(from_mask(smask), from_mask(tmask), s, t)
    return None


# Lemma property checks.  Each returns how many instances met the hypothesis
# and the clique sets that broke the conclusion.


@dataclass
class LemmaOutcome:
    name: str
    checked: int = 0
    violations: list[list[int]] = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.violations:
            return "violation"
        return "ok" if self.checked else "vacuous"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "checked": self.checked,
            "violations": self.violations,
        }


DENSE = "dense-clique"
EQUAL_NEIGHBOURHOOD = "equal-common-neighbourhood"
DISJOINT_NEIGHBOURHOODS = "disjoint-closed-neighbourhoods"
CLIQUE_CUTSET = "clique-cutset"
LEMMA_NAMES = (DENSE, EQUAL_NEIGHBOURHOOD, DISJOINT_NEIGHBOURHOODS, CLIQUE_CUTSET)


def _tihany_cached(g: Graph, chi: int, budget: BudgetLike, cache: dict[int, bool] | None):
    def test(kmask: int) -> bool:
        if cache is not None and kmask in cache:
            return cache[kmask]
        out = isinstance(is_tihany(g, bits(kmask), budget, chi=chi), TihanyCertificate)
        if cache is not None:
            cache[kmask] = out
        return out

    return test


def check_dense_cliques(
    g: Graph, chi: int, budget: BudgetLike = None, kmax: int = 5, cache: dict | None = None
) -> LemmaOutcome:
    """Every dense clique of size <= kmax is Tihany when chi > omega."""
    out = LemmaOutcome(DENSE)
    if chi <= clique_number(g)[0]:
        return out
    test = _tihany_cached(g, chi, budget, cache)
    for clique in cliques_up_to(g, kmax):
        kmask = to_mask(clique)
        if not is_clique_mask(g, common_neighbors_mask(g, kmask)):
            continue
        out.checked += 1
        if not test(kmask):
            out.violations.append(list(clique))
    return out


def equal_neighbourhood_braces(g: Graph) -> list[tuple[int, int, int]]:
    """Triples (u, x, y) with ux, uy edges, xy a non-edge and C(ux) = C(uy)."""
    out = []
    for u in range(g.n):
        nbrs = sorted(bits(g.rows[u]))
        for x, y in combinations(nbrs, 2):
            if g.rows[x] >> y & 1:
                continue
            cx = common_neighbors_mask(g, (1 << u) | (1 << x))
            cy = common_neighbors_mask(g, (1 << u) | (1 << y))
            if cx == cy:
                out.append((u, x, y))
    return out


def check_equal_neighbourhoods(
    g: Graph, chi: int, budget: BudgetLike = None, cache: dict | None = None
) -> LemmaOutcome:
    out = LemmaOutcome(EQUAL_NEIGHBOURHOOD)
    if chi <= clique_number(g)[0]:
        return out
    test = _tihany_cached(g, chi, budget, cache)
    for u, x, y in equal_neighbourhood_braces(g):
        out.checked += 1
        for e in ((u, x), (u, y)):
            if not test(to_mask(e)):
                out.violations.append(sorted(e))
    return out


def disjoint_neighbourhood_pairs(g: Graph) -> list[tuple[int, int]]:
    """Pairs of braces/triangles with disjoint, jointly triad-free closed
    neighbourhoods (as clique masks)."""
    cliques = [to_mask(c) for c in cliques_up_to(g, 3, min_size=2)]
    closed = {k: common_neighbors_mask(g, k) | k for k in cliques}
    triads = triad_masks(g)
    out = []
    for i, p in enumerate(cliques):
        for q in cliques[i + 1:]:
            if closed[p] & closed[q]:
                continue
            union = closed[p] | closed[q]
            if any(t & union == t for t in triads):
                continue
            out.append((p, q))
    return out


def check_disjoint_neighbourhoods(
    g: Graph, chi: int, budget: BudgetLike = None, cache: dict | None = None
) -> LemmaOutcome:
    out = LemmaOutcome(DISJOINT_NEIGHBOURHOODS)
    if chi <= clique_number(g)[0]:
        return out
    test = _tihany_cached(g, chi, budget, cache)
    for p, q in disjoint_neighbourhood_pairs(g):
        out.checked += 1
        if not test(p) and not test(q):
            out.violations.append(sorted(bits(p | q)))
    return out


def cutset_brace(g: Graph, budget: BudgetLike = None) -> tuple[int, int] | None:
    """An edge from the lower-chromatic side into a clique cutset."""
    if g.n < 3 or len(components_mask(g)) != 1:
        return None
    cut = find_clique_cutset(g)
    if cut is None:
        return None
    kmask, amask, bmask = to_mask(cut.k), to_mask(cut.a), to_mask(cut.b)
    chis = []
    for side in (amask, bmask):
        sub, _ = induced_mask(g, side | kmask)
        chis.append(chromatic_number(sub, budget)[0])
    low = bmask if chis[0] >= chis[1] else amask
    for x in bits(low):
        hit = g.rows[x] & kmask
        if hit:
            y = (hit & -hit).bit_length() - 1
            return (min(x, y), max(x, y))
    return None


def check_clique_cutset(
    g: Graph, chi: int, budget: BudgetLike = None, cache: dict | None = None
) -> LemmaOutcome:
    out = LemmaOutcome(CLIQUE_CUTSET)
    if chi <= clique_number(g)[0] or find_claw(g) is not None:
        return out
    brace = cutset_brace(g, budget)
    if brace is None:
        return out
    out.checked = 1
    if not _tihany_cached(g, chi, budget, cache)(to_mask(brace)):
        out.violations.append(list(brace))
    return out


LEMMA_CHECKS = {
    DENSE: check_dense_cliques,
    EQUAL_NEIGHBOURHOOD: check_equal_neighbourhoods,
    DISJOINT_NEIGHBOURHOODS: check_disjoint_neighbourhoods,
    CLIQUE_CUTSET: check_clique_cutset,
}


def certifying_lemma(g: Graph, clique: Iterable[int], budget: BudgetLike = None) -> str | None:
    """Which lemma hypothesis already guarantees that ``clique`` is Tihany."""
    kmask = to_mask(clique)
    if is_clique_mask(g, common_neighbors_mask(g, kmask)):
        return DENSE
    if kmask.bit_count() == 2:
        for u, x, y in equal_neighbourhood_braces(g):
            if kmask in (to_mask((u, x)), to_mask((u, y))):
                return EQUAL_NEIGHBOURHOOD
    if find_claw(g) is None and cutset_brace(g, budget) == tuple(sorted(bits(kmask))):
        return CLIQUE_CUTSET
    return None
