"""Machine checks of the minimal-connectivity characterizations.

Every check evaluates two independently computed sides per group:

* the graph side (lhs) comes from brute-force connectivity recomputation in
  the :mod:`connectivity` module;
* the structural side (rhs) comes from group data only — the predicates in
  the ``structural predicates`` section below never touch a ``SimpleGraph``.

``T_GRAPH`` is the one purely graph-theoretic check (the unique-dominating +
regular-remainder criterion); there the rhs is the structural fast path of
:func:`~groupgraphs.connectivity.minimally_edge_connected_fast` and the lhs
is brute force.  A disagreement on any applicable pair is a hard failure of
the suite, with the witness serialized.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from random import Random

from .builders import (
    GraphKind,
    GroupGraph,
    Reduction,
    enhanced_power_graph,
    order_superpower_graph,
    power_graph,
    reduce_graph,
)
from .connectivity import (
    is_minimally_connected,
    is_minimally_edge_connected,
    minimally_edge_connected_fast,
    vertex_connectivity,
)
from .families import GroupSpec, parse_group_spec
from .graphs import (
    SimpleGraph,
    degree_profile,
    dominating_vertices,
    format_edge_list,
    graph_from_edges,
    is_complete,
    is_regular,
)
from .groups import (
    Classification,
    FiniteGroup,
    MaximalCyclicFamily,
    NilpotentShape,
    build_group,
    classify_group,
    maximal_cyclic_subgroups,
)


class TheoremId(Enum):
    """One entry per verified statement; values are the CLI names."""

    T_GRAPH = "T_GRAPH"          # m.e.c. <=> unique dominating + regular remainder
    C_POWER = "C_POWER"          # power graph m.e.c. <=> non-cyclic of prime exponent
    C_EPG_MEC = "C_EPG_MEC"      # enhanced m.e.c. <=> equal-size, trivially meeting M(G)
    C_EPG_NILP = "C_EPG_NILP"    # nilpotent case: enhanced m.e.c. <=> p-group of exponent p
    C_DQSD = "C_DQSD"            # dihedral/quaternion/semidihedral enhanced never m.e.c.
    T_EPG_MC = "T_EPG_MC"        # enhanced minimally connected <=> cyclic or (Z2)^k
    C_S_FULLEXP = "C_S_FULLEXP"  # full exponent: superpower m.e.c. <=> p-group
    P_S_EVEN = "P_S_EVEN"        # even order, not a p-group: superpower not m.e.c.
    T_S_MC = "T_S_MC"            # superpower minimally connected <=> p-group
    P_INV = "P_INV"              # min degree = kappa forces a unique involution
    T_DK = "T_DK"                # nilpotent: delta = kappa <=> p-group or Z2 x odd P
    R_POW = "R_POW"              # identity-reduced power graph regularity
    R_EPG = "R_EPG"              # identity-reduced enhanced graph regularity


_ID_ORDER = {tid: i for i, tid in enumerate(TheoremId)}

_KIND_OF_ID = {
    TheoremId.C_POWER: GraphKind.POWER,
    TheoremId.C_EPG_MEC: GraphKind.ENHANCED,
    TheoremId.C_EPG_NILP: GraphKind.ENHANCED,
    TheoremId.C_DQSD: GraphKind.ENHANCED,
    TheoremId.T_EPG_MC: GraphKind.ENHANCED,
    TheoremId.C_S_FULLEXP: GraphKind.SUPER,
    TheoremId.P_S_EVEN: GraphKind.SUPER,
    TheoremId.T_S_MC: GraphKind.SUPER,
    TheoremId.P_INV: GraphKind.SUPER,
    TheoremId.T_DK: GraphKind.SUPER,
    TheoremId.R_POW: GraphKind.POWER,
    TheoremId.R_EPG: GraphKind.ENHANCED,
}


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    group: str
    kind: str | None
    applicable: bool
    lhs: bool | None
    rhs: bool | None
    agree: bool | None
    witness: str | None
    millis: int

    def sort_key(self):
        return (_ID_ORDER[TheoremId(self.theorem)], self.group, self.kind or "")

    def to_json_dict(self, timings: bool = False) -> dict:
        row = {
            "theorem": self.theorem,
            "group": self.group,
            "kind": self.kind,
            "applicable": self.applicable,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "agree": self.agree,
            "witness": self.witness,
        }
        if timings:
            row["millis"] = self.millis
        return row


class GroupContext:
    """Per-group lazy cache shared by all checks on that group."""

    def __init__(self, spec: GroupSpec, group: FiniteGroup | None = None):
        self.spec = spec
        self.spec_text = spec.render()
        self.group: FiniteGroup = build_group(spec) if group is None else group
        self._classification: Classification | None = None
        self._family: MaximalCyclicFamily | None = None
        self._graphs: dict[GraphKind, GroupGraph] = {}
        self._super_kappa: int | None = None

    @property
    def classification(self) -> Classification:
        if self._classification is None:
            self._classification = classify_group(self.group)
        return self._classification

    @property
    def family(self) -> MaximalCyclicFamily:
        if self._family is None:
            self._family = maximal_cyclic_subgroups(self.group)
        return self._family

    def graph(self, kind: GraphKind) -> GroupGraph:
        if kind not in self._graphs:
            builder = {GraphKind.POWER: power_graph,
                       GraphKind.ENHANCED: enhanced_power_graph,
                       GraphKind.SUPER: order_superpower_graph}[kind]
            self._graphs[kind] = builder(self.group)
        return self._graphs[kind]

    def super_kappa(self) -> int:
        if self._super_kappa is None:
            self._super_kappa = vertex_connectivity(self.graph(GraphKind.SUPER).graph)
        return self._super_kappa


# --- structural predicates (group side: no SimpleGraph access) ----------------

def _family_uniform_and_trivial(fam: MaximalCyclicFamily) -> tuple[bool, str | None]:
    """All maximal cyclics of one size, pairwise meeting only in the identity."""
    members = fam.members
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            a, b = members[i], members[j]
            if a.size != b.size:
                return False, f"maximal cyclics of sizes {a.size} and {b.size}"
            shared = (set(a.elements) & set(b.elements)) - {0}
            if shared:
                return False, f"maximal cyclics share element {min(shared)}"
    return True, None


def _unique_involution_conclusions(ctx: GroupContext) -> tuple[bool, str | None]:
    """A unique element of order 2 and no elements of order 2^a with a >= 2."""
    group = ctx.group
    involutions = [x for x in range(group.n) if group.orders[x] == 2]
    if len(involutions) != 1:
        return False, f"{len(involutions)} elements of order 2"
    for x in range(group.n):
        o = group.orders[x]
        if o >= 4 and (o & (o - 1)) == 0:
            return False, f"element {group.labels[x]} of order {o}"
    return True, None


# --- graph-side helpers --------------------------------------------------------

def _mec(gg: GroupGraph) -> tuple[bool, str | None]:
    ok, witness = is_minimally_edge_connected(gg.graph)
    return ok, None if witness is None else f"edge {gg.edge_label(*witness)}"


def _mc(gg: GroupGraph) -> tuple[bool, str | None]:
    ok, witness = is_minimally_connected(gg.graph)
    return ok, None if witness is None else f"edge {gg.edge_label(*witness)}"


# --- the checks -----------------------------------------------------------------

def _check_t_graph(ctx: GroupContext) -> list[TheoremVerdict]:
    rows = []
    for kind in GraphKind:
        start = time.perf_counter()
        gg = ctx.graph(kind)
        g = gg.graph
        doms = dominating_vertices(g)
        if is_complete(g) or not doms:
            rows.append(_verdict(TheoremId.T_GRAPH, ctx, kind, start,
                                 applicable=False))
            continue
        lhs, lhs_witness = _mec(gg)
        rhs = minimally_edge_connected_fast(g)
        if not rhs and len(doms) > 1:
            labels = gg.labels
            witness = f"dominating vertices {labels[doms[0]]} and {labels[doms[1]]}"
        elif not rhs:
            witness = "remainder after deleting the dominating vertex is irregular"
        else:
            witness = lhs_witness
        rows.append(_verdict(TheoremId.T_GRAPH, ctx, kind, start,
                             lhs=lhs, rhs=rhs, witness=witness))
    return rows


def _check_c_power(ctx: GroupContext, start: float) -> TheoremVerdict:
    gg = ctx.graph(GraphKind.POWER)
    if is_complete(gg.graph):
        lhs, witness = False, "power graph is complete"
    else:
        lhs, witness = _mec(gg)
    cls = ctx.classification
    rhs = (not cls.is_cyclic) and cls.is_prime_exponent
    return _verdict(TheoremId.C_POWER, ctx, None, start,
                    lhs=lhs, rhs=rhs, witness=witness)


def _check_c_epg_mec(ctx: GroupContext, start: float) -> TheoremVerdict | None:
    if ctx.classification.is_cyclic:
        return _verdict(TheoremId.C_EPG_MEC, ctx, None, start, applicable=False)
    lhs, lhs_witness = _mec(ctx.graph(GraphKind.ENHANCED))
    rhs, rhs_witness = _family_uniform_and_trivial(ctx.family)
    return _verdict(TheoremId.C_EPG_MEC, ctx, None, start,
                    lhs=lhs, rhs=rhs, witness=lhs_witness or rhs_witness)


def _check_c_epg_nilp(ctx: GroupContext, start: float) -> TheoremVerdict:
    cls = ctx.classification
    if cls.is_cyclic or not cls.is_nilpotent:
        return _verdict(TheoremId.C_EPG_NILP, ctx, None, start, applicable=False)
    lhs, witness = _mec(ctx.graph(GraphKind.ENHANCED))
    rhs = cls.is_p_group and cls.is_prime_exponent
    return _verdict(TheoremId.C_EPG_NILP, ctx, None, start,
                    lhs=lhs, rhs=rhs, witness=witness)


def _check_c_dqsd(ctx: GroupContext, start: float) -> TheoremVerdict:
    from .families import Dihedral, GeneralizedQuaternion, Semidihedral
    if not isinstance(ctx.spec, (Dihedral, GeneralizedQuaternion, Semidihedral)):
        return _verdict(TheoremId.C_DQSD, ctx, None, start, applicable=False)
    lhs, witness = _mec(ctx.graph(GraphKind.ENHANCED))
    return _verdict(TheoremId.C_DQSD, ctx, None, start,
                    lhs=lhs, rhs=False, witness=witness)


def _check_t_epg_mc(ctx: GroupContext, start: float) -> TheoremVerdict:
    lhs, witness = _mc(ctx.graph(GraphKind.ENHANCED))
    cls = ctx.classification
    rhs = cls.is_cyclic or cls.is_elementary_abelian_2
    return _verdict(TheoremId.T_EPG_MC, ctx, None, start,
                    lhs=lhs, rhs=rhs, witness=witness)


def _check_c_s_fullexp(ctx: GroupContext, start: float) -> TheoremVerdict:
    cls = ctx.classification
    if not cls.full_exponent:
        return _verdict(TheoremId.C_S_FULLEXP, ctx, None, start, applicable=False)
    lhs, witness = _mec(ctx.graph(GraphKind.SUPER))
    return _verdict(TheoremId.C_S_FULLEXP, ctx, None, start,
                    lhs=lhs, rhs=cls.is_p_group, witness=witness)


def _check_p_s_even(ctx: GroupContext, start: float) -> TheoremVerdict:
    cls = ctx.classification
    if ctx.group.n % 2 != 0 or cls.is_p_group:
        return _verdict(TheoremId.P_S_EVEN, ctx, None, start, applicable=False)
    lhs, witness = _mec(ctx.graph(GraphKind.SUPER))
    return _verdict(TheoremId.P_S_EVEN, ctx, None, start,
                    lhs=lhs, rhs=False, witness=witness)


def _check_t_s_mc(ctx: GroupContext, start: float) -> TheoremVerdict:
    lhs, witness = _mc(ctx.graph(GraphKind.SUPER))
    return _verdict(TheoremId.T_S_MC, ctx, None, start,
                    lhs=lhs, rhs=ctx.classification.is_p_group, witness=witness)


def _check_p_inv(ctx: GroupContext, start: float) -> TheoremVerdict:
    cls = ctx.classification
    if cls.is_p_group:
        return _verdict(TheoremId.P_INV, ctx, None, start, applicable=False)
    gg = ctx.graph(GraphKind.SUPER)
    profile = degree_profile(gg.graph)
    lhs = ctx.super_kappa() == profile.min_degree  # premise: delta = kappa
    rhs, witness = _unique_involution_conclusions(ctx)
    if rhs:
        group = ctx.group
        for v, d in enumerate(profile.degrees):
            if d == profile.min_degree and group.orders[gg.elements[v]] != 2:
                rhs = False
                witness = (f"min-degree vertex {gg.labels[v]} has order "
                           f"{group.orders[gg.elements[v]]}")
                break
    # one-directional: a failed premise verifies vacuously
    agree = (not lhs) or rhs
    return _verdict(TheoremId.P_INV, ctx, None, start,
                    lhs=lhs, rhs=rhs, agree=agree,
                    witness=witness if (lhs and not rhs) else None)


def _check_t_dk(ctx: GroupContext, start: float) -> TheoremVerdict:
    cls = ctx.classification
    if not cls.is_nilpotent:
        return _verdict(TheoremId.T_DK, ctx, None, start, applicable=False)
    gg = ctx.graph(GraphKind.SUPER)
    delta = degree_profile(gg.graph).min_degree
    kappa = ctx.super_kappa()
    lhs = delta == kappa
    rhs = cls.nilpotent_shape in (NilpotentShape.P_GROUP,
                                  NilpotentShape.Z2_CROSS_ODD_P_GROUP)
    witness = None
    if lhs != rhs:
        witness = (f"min degree {delta}, vertex connectivity {kappa}, "
                   f"shape {cls.nilpotent_shape.value}")
    return _verdict(TheoremId.T_DK, ctx, None, start,
                    lhs=lhs, rhs=rhs, witness=witness)


def _check_r_pow(ctx: GroupContext, start: float) -> TheoremVerdict:
    reduced = reduce_graph(ctx.graph(GraphKind.POWER), Reduction.DELETE_IDENTITY)
    lhs = is_regular(reduced.graph)
    cls = ctx.classification
    rhs = (cls.is_cyclic and cls.is_p_group) or cls.is_prime_exponent
    return _verdict(TheoremId.R_POW, ctx, None, start, lhs=lhs, rhs=rhs)


def _check_r_epg(ctx: GroupContext, start: float) -> TheoremVerdict:
    reduced = reduce_graph(ctx.graph(GraphKind.ENHANCED), Reduction.DELETE_IDENTITY)
    lhs = is_regular(reduced.graph)
    cls = ctx.classification
    if cls.is_cyclic:
        rhs, witness = True, None
    else:
        rhs, witness = _family_uniform_and_trivial(ctx.family)
    return _verdict(TheoremId.R_EPG, ctx, None, start,
                    lhs=lhs, rhs=rhs, witness=witness if lhs != rhs else None)


def _verdict(tid: TheoremId, ctx: GroupContext, kind: GraphKind | None,
             start: float, applicable: bool = True, lhs: bool | None = None,
             rhs: bool | None = None, agree: bool | None = None,
             witness: str | None = None) -> TheoremVerdict:
    if applicable and agree is None:
        agree = lhs == rhs
    if not applicable:
        lhs = rhs = agree = None
        witness = None
    if kind is None:
        kind_value = _KIND_OF_ID.get(tid)
        kind_str = kind_value.value if kind_value else None
    else:
        kind_str = kind.value
    millis = int((time.perf_counter() - start) * 1000)
    return TheoremVerdict(tid.value, ctx.spec_text, kind_str, applicable,
                          lhs, rhs, agree, witness, millis)


_SINGLE_CHECKS = {
    TheoremId.C_POWER: _check_c_power,
    TheoremId.C_EPG_MEC: _check_c_epg_mec,
    TheoremId.C_EPG_NILP: _check_c_epg_nilp,
    TheoremId.C_DQSD: _check_c_dqsd,
    TheoremId.T_EPG_MC: _check_t_epg_mc,
    TheoremId.C_S_FULLEXP: _check_c_s_fullexp,
    TheoremId.P_S_EVEN: _check_p_s_even,
    TheoremId.T_S_MC: _check_t_s_mc,
    TheoremId.P_INV: _check_p_inv,
    TheoremId.T_DK: _check_t_dk,
    TheoremId.R_POW: _check_r_pow,
    TheoremId.R_EPG: _check_r_epg,
}


def verify_theorem(tid: TheoremId, ctx: GroupContext | FiniteGroup | GroupSpec | str
                   ) -> list[TheoremVerdict]:
    """Evaluate one check on one group.

    Returns a list because ``T_GRAPH`` produces one verdict per group graph;
    every other id yields exactly one.
    """
    if isinstance(ctx, str):
        ctx = GroupContext(parse_group_spec(ctx))
    elif isinstance(ctx, GroupSpec):
        ctx = GroupContext(ctx)
    elif isinstance(ctx, FiniteGroup):
        ctx = GroupContext(ctx.spec, group=ctx)
    if tid is TheoremId.T_GRAPH:
        return _check_t_graph(ctx)
    return [_SINGLE_CHECKS[tid](ctx, time.perf_counter())]


# --- catalog sweeps -------------------------------------------------------------

@dataclass(frozen=True)
class SweepError:
    group: str
    error: str


@dataclass(frozen=True)
class SweepResult:
    verdicts: tuple[TheoremVerdict, ...]
    errors: tuple[SweepError, ...]

    @property
    def agreements(self) -> int:
        return sum(1 for v in self.verdicts if v.applicable and v.agree)

    @property
    def disagreements(self) -> int:
        return sum(1 for v in self.verdicts if v.applicable and not v.agree)

    @property
    def inapplicable(self) -> int:
        return sum(1 for v in self.verdicts if not v.applicable)

    def summary_dict(self) -> dict:
        groups = len({v.group for v in self.verdicts} | {e.group for e in self.errors})
        return {
            "groups": groups,
            "verdicts": len(self.verdicts),
            "agreements": self.agreements,
            "disagreements": self.disagreements,
            "inapplicable": self.inapplicable,
            "errors": len(self.errors),
        }


def _sweep_one(spec_text: str, id_names: tuple[str, ...]
               ) -> tuple[list[TheoremVerdict], SweepError | None]:
    try:
        ctx = GroupContext(parse_group_spec(spec_text))
        verdicts: list[TheoremVerdict] = []
        for name in id_names:
            verdicts.extend(verify_theorem(TheoremId(name), ctx))
        return verdicts, None
    except Exception as exc:  # per-group failures must not abort the sweep
        return [], SweepError(spec_text, f"{type(exc).__name__}: {exc}")


def sweep_catalog(ids: list[TheoremId] | None = None,
                  specs: list[GroupSpec] | None = None,
                  max_order: int | None = None,
                  jobs: int = 1) -> SweepResult:
    """Run the checks over a catalog; output order is deterministic.

    ``max_order`` filters family entries to that order and direct products to
    ``max_order + 8`` (the builtin catalog's product slack).
    """
    from .catalog import PRODUCT_CAP_SLACK, builtin_catalog
    from .families import DirectProduct

    if ids is None:
        ids = list(TheoremId)
    ids = sorted(set(ids), key=lambda t: _ID_ORDER[t])
    if specs is None:
        specs = builtin_catalog(max_order if max_order is not None else 64)
    if max_order is not None:
        cap = max_order + PRODUCT_CAP_SLACK
        specs = [s for s in specs
                 if s.order <= (cap if isinstance(s, DirectProduct) else max_order)]
    id_names = tuple(t.value for t in ids)
    tasks = [s.render() for s in specs]

    verdicts: list[TheoremVerdict] = []
    errors: list[SweepError] = []
    if jobs <= 1:
        results = (_sweep_one(text, id_names) for text in tasks)
        for vs, err in results:
            verdicts.extend(vs)
            if err:
                errors.append(err)
    else:
        import multiprocessing as mp
        with mp.Pool(processes=jobs) as pool:
            for vs, err in pool.starmap(_sweep_one,
                                        [(text, id_names) for text in tasks],
                                        chunksize=1):
                verdicts.extend(vs)
                if err:
                    errors.append(err)
    verdicts.sort(key=TheoremVerdict.sort_key)
    errors.sort(key=lambda e: e.group)
    return SweepResult(tuple(verdicts), tuple(errors))


# --- random apex fuzzing ---------------------------------------------------------

@dataclass(frozen=True)
class FuzzSummary:
    count: int
    compared: int
    skipped_complete: int
    agreements: int
    disagreements: int
    counterexamples: tuple[str, ...]  # edge-list text of any disagreeing graphs

    def to_json_dict(self) -> dict:
        return {
            "count": self.count,
            "compared": self.compared,
            "skipped_complete": self.skipped_complete,
            "agreements": self.agreements,
            "disagreements": self.disagreements,
            "counterexamples": list(self.counterexamples),
        }


def random_apex_graph(rng: Random, n_base: int, probability: Fraction) -> SimpleGraph:
    """A random base graph plus one universal vertex (index ``n_base``)."""
    num, den = probability.numerator, probability.denominator
    edges = [(u, v)
             for u in range(n_base)
             for v in range(u + 1, n_base)
             if rng.randrange(den) < num]
    edges.extend((u, n_base) for u in range(n_base))
    return graph_from_edges(n_base + 1, edges)


def fuzz_apex_graphs(count: int, n_range: tuple[int, int] = (4, 12),
                     edge_probability: Fraction = Fraction(1, 2),
                     rng_seed: int = 42) -> FuzzSummary:
    """Compare the fast decider against brute force on random apex graphs.

    Complete samples fall outside the criterion's hypothesis and are skipped.
    Fully reproducible from the seed.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = Random(rng_seed)
    lo, hi = n_range
    compared = skipped = agreements = 0
    counterexamples: list[str] = []
    for _ in range(count):
        g = random_apex_graph(rng, rng.randint(lo, hi), edge_probability)
        if is_complete(g):
            skipped += 1
            continue
        fast = minimally_edge_connected_fast(g)
        brute, _ = is_minimally_edge_connected(g)
        compared += 1
        if fast == brute:
            agreements += 1
        else:
            counterexamples.append(format_edge_list(g))
    return FuzzSummary(count, compared, skipped, agreements,
                       len(counterexamples), tuple(counterexamples))
