"""One executable check per claim, each returning a Verdict per mode.

Every check sweeps a deterministic instance corpus (exhaustive where the
carrier bounds allow, seeded where sampling is involved) and either
certifies the claim on all instances or reports counterexample witnesses
that replay through the primitive membership definitions.  Degenerate
constructions (an empty meet) are counted separately from counterexamples.

The claim identifiers are stable artifact ids; their titles state the
property being audited.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .lattice import RationalVector, format_rational, is_disjoint, leq, neg, pos
from .topology import (
    NeighborhoodSpec,
    SemanticsMode,
    SpaceSpec,
    audit_base_axioms,
    audit_pseudonorm_axioms,
    evaluate,
)
from .finite import (
    FiniteCarrier,
    FiniteMap,
    FiniteNet,
    all_directed_index_sets,
    check_continuity_finite,
    enumerate_restricted_neighborhoods,
    minimal_restricted_neighborhood,
    net_cluster_finite,
    net_converges_finite,
)
from .filters import (
    ConstructionError,
    PrincipalFilter,
    all_principal_filters,
    associated_filter_finite,
    cluster_finite,
    converges_finite,
    finer_filter_witness,
    is_subfilter,
    join_filter,
    meet_filter,
    neighborhood_filter,
    pushforward,
)
from .sequences import (
    Poly,
    PolySequence,
    cluster_point_seq,
    divergence_radius,
    filter_converges_seq,
    seq_converges,
)
from .report import AuditReport
from .verdict import Status, Verdict

MAX_WITNESSES = 3

CLAIM_TITLES = {
    "BASE-AXIOMS": "neighborhood bases satisfy the four base properties",
    "COR-PSEUDO": "filter convergence matches vanishing pseudonorm limits",
    "EX2-FILTERHOOD": "the bare qualifying-neighborhood collection is a filter",
    "PROP-CONT": "continuity matches pushforward convergence preservation",
    "PROP1a": "limits shift by positive vectors",
    "PROP1b": "limits shift by disjoint vectors",
    "PROP2": "limits pass to absolute values",
    "PROP3": "limits pass to positive and negative parts",
    "PSEUDO-AXIOMS": "declared pseudonorms satisfy the five axioms",
    "REM1": "convergent filters cluster at their limits",
    "REM2": "convergence passes to finer filters",
    "THM-CLUSTER": "cluster points are exactly limits of finer filters",
    "THM-JOIN": "the pairwise-union family is a filter converging to the sum",
    "THM-MEET": "the pairwise-intersection family is a filter converging to the sum",
    "THM-NETFILTER": "net convergence matches associated-filter convergence",
}

CLAIM_IDS = tuple(sorted(CLAIM_TITLES))

MODE_ORDER = (SemanticsMode.ZERO_NBHD, SemanticsMode.TRANSLATED)


@dataclass
class AuditOptions:
    exhaustive_carrier_bound: int = 6
    join_carrier_bound: int = 4
    cluster_carrier_bound: int = 6
    net_index_bound: int = 3
    net_carrier_bound: int = 4
    map_count_bound: int = 256
    continuity_pairs: tuple[tuple[str, str], ...] = ()
    random_sequences: int = 0

    @classmethod
    def from_json(cls, data: dict) -> "AuditOptions":
        opts = cls()
        for key in (
            "exhaustive_carrier_bound",
            "join_carrier_bound",
            "cluster_carrier_bound",
            "net_index_bound",
            "net_carrier_bound",
            "map_count_bound",
            "random_sequences",
        ):
            if key in data:
                setattr(opts, key, int(data[key]))
        if "continuity_pairs" in data:
            opts.continuity_pairs = tuple(
                (str(a), str(b)) for a, b in data["continuity_pairs"]
            )
        return opts


@dataclass
class AuditContext:
    """Resolved corpus objects plus memoized convergence primitives."""

    spaces: dict[str, SpaceSpec]
    carriers: dict[str, FiniteCarrier]
    sequences: dict[str, tuple[str, PolySequence]]  # id -> (space id, sequence)
    nets: dict[str, FiniteNet]
    maps: dict[str, FiniteMap]
    options: AuditOptions
    seed: int
    _nbhds: dict = field(default_factory=dict)
    _conv: dict = field(default_factory=dict)
    _clus: dict = field(default_factory=dict)

    def rng(self, tag: str) -> random.Random:
        return random.Random(f"{self.seed}:{tag}")

    def carrier_items(self) -> list[tuple[str, FiniteCarrier]]:
        return sorted(self.carriers.items())

    def sequence_items(self) -> list[tuple[str, str, PolySequence]]:
        out = [(sid, spid, seq) for sid, (spid, seq) in sorted(self.sequences.items())]
        out.extend(self._random_sequences())
        return out

    def _random_sequences(self) -> list[tuple[str, str, PolySequence]]:
        count = self.options.random_sequences
        if not count:
            return []
        usable = [
            (spid, sp) for spid, sp in sorted(self.spaces.items()) if sp.dim <= 4
        ]
        if not usable:
            return []
        rng = self.rng("random-sequences")
        out = []
        for i in range(count):
            spid, sp = usable[i % len(usable)]
            seq = PolySequence(
                tuple(
                    _random_poly(rng) for _ in range(sp.dim)
                )
            )
            out.append((f"~rnd{i:03d}", spid, seq))
        return out

    def nbhds(
        self, cid: str, center: RationalVector, mode: SemanticsMode
    ) -> list[frozenset[int]]:
        key = (cid, center, mode)
        if key not in self._nbhds:
            self._nbhds[key] = enumerate_restricted_neighborhoods(
                self.carriers[cid], center, mode
            )
        return self._nbhds[key]

    def converges(
        self, cid: str, minset: frozenset[int], e: RationalVector, mode: SemanticsMode
    ) -> bool:
        key = (cid, minset, e, mode)
        if key not in self._conv:
            self._conv[key] = all(minset <= n for n in self.nbhds(cid, e, mode))
        return self._conv[key]

    def clusters(
        self, cid: str, minset: frozenset[int], e: RationalVector, mode: SemanticsMode
    ) -> bool:
        key = (cid, minset, e, mode)
        if key not in self._clus:
            self._clus[key] = all(minset & n for n in self.nbhds(cid, e, mode))
        return self._clus[key]

    def seq_candidates(self, spid: str, seq: PolySequence) -> list[RationalVector]:
        """Deterministic candidate limit points for one sequence."""
        space = self.spaces[spid]
        limit = seq.limit_vector()
        unit = RationalVector(
            tuple(Fraction(1) if i == 0 else Fraction(0) for i in range(space.dim))
        )
        candidates = [limit, space.zero(), limit + unit, limit - unit]
        seen: list[RationalVector] = []
        for c in candidates:
            if c not in seen:
                seen.append(c)
        return seen


def _random_poly(rng: random.Random) -> Poly:
    degree = rng.randint(0, 3)
    return Poly(
        tuple(
            Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(degree + 1)
        )
    )


def _vec(v: RationalVector) -> list[str]:
    return v.to_json()


def _set(carrier: FiniteCarrier, s: frozenset[int]) -> list[list[str]]:
    return [p.to_json() for p in carrier.subset_points(s)]


def _finish(
    claim_id: str,
    mode: SemanticsMode,
    instances: dict,
    witnesses: list[dict],
    notes: Iterable[str] = (),
) -> Verdict:
    total = instances.get("instances", 0)
    if total == 0:
        status = Status.SKIPPED
    elif witnesses:
        status = Status.COUNTEREXAMPLE
    else:
        status = Status.HOLDS
    return Verdict(
        claim_id=claim_id,
        mode=mode.value,
        status=status,
        instances=instances,
        witnesses=tuple(witnesses[:MAX_WITNESSES]),
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# Remarks
# ---------------------------------------------------------------------------


def check_REM1(ctx: AuditContext, mode: SemanticsMode) -> Verdict:
    """Convergence implies clustering, per filter and point."""
    total = 0
    witnesses: list[dict] = []
    for cid, carrier in ctx.carrier_items():
        if len(carrier) > ctx.options.exhaustive_carrier_bound:
            continue
        for filt in all_principal_filters(carrier):
            for e in carrier.points:
                total += 1
                if ctx.converges(cid, filt.minset, e, mode) and not ctx.clusters(
                    cid, filt.minset, e, mode
                ):
                    witnesses.append(
                        {"carrier": cid, "minset": _set(carrier, filt.minset), "e": _vec(e)}
                    )
    return _finish("REM1", mode, {"instances": total}, witnesses)


def check_REM2(ctx: AuditContext, mode: SemanticsMode) -> Verdict:
    """A finer filter inherits every limit of a coarser one."""
    total = 0
    witnesses: list[dict] = []
    for cid, carrier in ctx.carrier_items():
        if len(carrier) > ctx.options.exhaustive_carrier_bound:
            continue
        minsets = [f.minset for f in all_principal_filters(carrier)]
        for coarse in minsets:
            for fine in minsets:
                if not fine <= coarse:
                    continue  # finer filters have smaller minimal members
                for e in carrier.points:
                    total += 1
                    if ctx.converges(cid, coarse, e, mode) and not ctx.converges(
                        cid, fine, e, mode
                    ):
                        witnesses.append(
                            {
                                "carrier": cid,
                                "coarse": _set(carrier, coarse),
                                "fine": _set(carrier, fine),
                                "e": _vec(e),
                            }
                        )
    return _finish("REM2", mode, {"instances": total}, witnesses)


# ---------------------------------------------------------------------------
# Limit-shift propositions
# ---------------------------------------------------------------------------


def _shift_pairs(
    carrier: FiniteCarrier, want: str
) -> list[tuple[RationalVector, RationalVector]]:
    """(e, x) pairs matching the side condition with e + x inside the carrier."""
    pts = set(carrier.points)
    zero = carrier.space.zero()
    out = []
    for e in carrier.points:
        for x in carrier.points:
            if (e + x) not in pts:
                continue
            if want == "positive" and leq(zero, e) and leq(zero, x):
                out.append((e, x))
            elif want == "disjoint" and is_disjoint(e, x):
                out.append((e, x))
    return out


def _check_shift(
    claim_id: str, ctx: AuditContext, mode: SemanticsMode, want: str
) -> Verdict:
    total = 0
    qualifying = 0
    witnesses: list[dict] = []
    for cid, carrier in ctx.carrier_items():
        if len(carrier) > ctx.options.exhaustive_carrier_bound:
            continue
        pairs = _shift_pairs(carrier, want)
        for filt in all_principal_filters(carrier):
            for e, x in pairs:
                total += 1
                if not ctx.converges(cid, filt.minset, e, mode):
                    continue
                qualifying += 1
                if not ctx.converges(cid, filt.minset, e + x, mode):
                    witnesses.append(
                        {
                            "carrier": cid,
                            "minset": _set(carrier, filt.minset),
                            "e": _vec(e),
                            "x": _vec(x),
                            "target": _vec(e + x),
                        }
                    )
    return _finish(
        claim_id, mode, {"instances": total, "convergent": qualifying}, witnesses
    )


def check_PROP1a(ctx: AuditContext, mode: SemanticsMode) -> Verdict:
    """If F converges to e it converges to e + x for positive e, x."""
    return _check_shift("PROP1a", ctx, mode, "positive")


def check_PROP1b(ctx: AuditContext, mode: SemanticsMode) -> Verdict:
    """If F converges to e it converges to e + x for disjoint e, x."""
    return _check_shift("PROP1b", ctx, mode, "disjoint")


def _check_part_map(
    claim_id: str,
    ctx: AuditContext,
    mode: SemanticsMode,
    parts: list[tuple[str, Callable[[RationalVector], RationalVector]]],
) -> Verdict:
    total = 0
    qualifying = 0
    witnesses: list[dict] = []
    for cid, carrier in ctx.carrier_items():
        if len(carrier) > ctx.options.exhaustive_carrier_bound:
            continue
        pts = set(carrier.points)
        for filt in all_principal_filters(carrier):
            for e in carrier.points:
                for part_name, part in parts:
                    target = part(e)
                    if target not in pts:
                        continue
                    total += 1
                    if not ctx.converges(cid, filt.minset, e, mode):
                        continue
                    qualifying += 1
                    if not ctx.converges(cid, filt.minset, target, mode):
                        witnesses.append(
                            {
                                "carrier": cid,
                                "minset": _set(carrier, filt.minset),
                                "e": _vec(e),
                                "part": part_name,
                                "target": _vec(target),
                            }
                        )
    return _finish(
        claim_id, mode, {"instances": total, "convergent": qualifying}, witnesses
    )


def check_PROP2(ctx: AuditContext, mode: SemanticsMode) -> Verdict:
    """If F converges to e it converges to |e|."""
    return _check_part_map("PROP2", ctx, mode, [("abs", lambda e: abs(e))])


def check_PROP3(ctx: AuditContext, mode: SemanticsMode) -> Verdict:
    """If F converges to e it converges to the positive and negative parts."""
    return _check_part_map("PROP3", ctx, mode, [("pos", pos), ("neg", neg)])


# ---------------------------------------------------------------------------
# Join / meet theorems
# ---------------------------------------------------------------------------


def _family_is_filter(carrier: FiniteCarrier, family: set[frozenset[int]]) -> str | None:
    """None when the explicit family satisfies the filter axioms, else the axiom."""
    if not family:
        return "nonempty"
    if frozenset() in family:
        return "excludes-empty-set"
    universe = list(carrier.all_subsets())
    ordered = sorted(family, key=sorted)
    for s in ordered:
        for t in universe:
            if s <= t and t not in family:
                return "upward-closure"
    for s in ordered:
        for t in ordered:
            if s & t not in family:
                return "intersection-closure"
    return None


def _convergent_filters(
    ctx: AuditContext, cid: str, carrier: FiniteCarrier, e: RationalVector, mode: SemanticsMode
) -> list[frozenset[int]]:
    return [
        f.minset
        for f in all_principal_filters(carrier)
        if ctx.converges(cid, f.minset, e, mode)
    ]


def _check_combine(
    claim_id: str, ctx: AuditContext, mode: SemanticsMode, op: str
) -> Verdict:
    total = 0
    degenerate = 0
    witnesses: list[dict] = []
    degenerate_witnesses: list[dict] = []
    for cid, carrier in ctx.carrier_items():
        if len(carrier) > ctx.options.join_carrier_bound:
            continue
        pos_pairs = _shift_pairs(carrier, "positive")
        pairs = pos_pairs + [
            p for p in _shift_pairs(carrier, "disjoint") if p not in pos_pairs
        ]
        subsets = list(carrier.all_subsets())
        for e, x in pairs:
            for s1 in _convergent_filters(ctx, cid, carrier, e, mode):
                f1 = PrincipalFilter(carrier, s1)
                fam1 = {t for t in subsets if s1 <= t}
                for s2 in _convergent_filters(ctx, cid, carrier, x, mode):
                    f2 = PrincipalFilter(carrier, s2)
                    total += 1
                    fam2 = {t for t in subsets if s2 <= t}
                    if op == "join":
                        combined = join_filter(f1, f2)
                        literal = {a | b for a in fam1 for b in fam2}
                    else:
                        literal = {a & b for a in fam1 for b in fam2 if a & b}
                        try:
                            combined = meet_filter(f1, f2)
                        except ConstructionError:
                            degenerate += 1
                            degenerate_witnesses.append(
                                {
                                    "carrier": cid,
                                    "minset1": _set(carrier, s1),
                                    "minset2": _set(carrier, s2),
                                    "violated": "intersection-closure",
                                }
                            )
                            continue
                    built = {t for t in subsets if combined.member(t)}
                    axiom = _family_is_filter(carrier, literal)
                    if axiom is not None or built != literal:
                        witnesses.append(
                            {
                                "carrier": cid,
                                "minset1": _set(carrier, s1),
                                "minset2": _set(carrier, s2),
                                "problem": axiom or "family-mismatch",
                            }
                        )
                        continue
                    if not ctx.converges(cid, combined.minset, e + x, mode):
                        witnesses.append(
                            {
                                "carrier": cid,
                                "minset1": _set(carrier, s1),
                                "minset2": _set(carrier, s2),
                                "e": _vec(e),
                                "x": _vec(x),
                                "target": _vec(e + x),
                                "combined": _set(carrier, combined.minset),
                            }
                        )
    counts = {"instances": total}
    notes = []
    if op == "meet":
        counts["degenerate"] = degenerate
        if degenerate:
            notes.append(
                "degenerate meets are construction-error instances counted "
                "separately from counterexamples; first: "
                + json.dumps(degenerate_witnesses[0], sort_keys=True)
            )
    return _finish(claim_id, mode, counts, witnesses, notes=notes)


def check_THM_JOIN(ctx: AuditContext, mode: SemanticsMode) -> Verdict:
    """Union family: filterhood (vs the literal family) plus convergence to e+x."""
    return _check_combine("THM-JOIN", ctx, mode, "join")


def check_THM_MEET(ctx: AuditContext, mode: SemanticsMode) -> Verdict:
    """Intersection family: filterhood where constructible, else degeneracy."""
    return _check_combine("THM-MEET", ctx, mode, "meet")


# ---------------------------------------------------------------------------
# Cluster characterization
# ---------------------------------------------------------------------------


def check_THM_CLUSTER(ctx: AuditContext, mode: SemanticsMode) -> Verdict:
    """Cluster points are exactly the limits of finer filters (both directions)."""
    total = 0
    witnesses: list[dict] = []
    for cid, carrier in ctx.carrier_items():
        if len(carrier) > ctx.options.cluster_carrier_bound:
            continue
        for filt in all_principal_filters(carrier):
            members = sorted(filt.minset)
            for e in carrier.points:
                total += 1
                clusters = ctx.clusters(cid, filt.minset, e, mode)
                # superfilter search: finer filters are up(T) for T inside the minset
                finer_converges = False
                for mask in range(1, 1 << len(members)):
                    t = frozenset(members[i] for i in range(len(members)) if mask >> i & 1)
                    if ctx.converges(cid, t, e, mode):
                        finer_converges = True
                        break
                ok = clusters == finer_converges
                if ok and clusters:
                    try:
                        g = finer_filter_witness(filt, e, mode)
                        ok = is_subfilter(filt, g) and ctx.converges(
                            cid, g.minset, e, mode
                        )
                    except ConstructionError:
                        ok = False
                if not ok:
                    witnesses.append(
                        {
                            "carrier": cid,
                            "minset": _set(carrier, filt.minset),
                            "e": _vec(e),
                            "clusters": clusters,
                            "finer_converges": finer_converges,
                        }
                    )
    return _finish("THM-CLUSTER", mode, {"instances": total}, witnesses)


# ---------------------------------------------------------------------------
# Net <-> filter theorem
# ---------------------------------------------------------------------------


def check_THM_NETFILTER(ctx: AuditContext, mode: SemanticsMode) -> Verdict:
    """Net convergence/clustering equals associated-filter convergence/clustering."""
    net_instances = 0
    seq_instances = 0
    witnesses: list[dict] = []

    index_sets = [
        d
        for size in range(1, ctx.options.net_index_bound + 1)
        for d in all_directed_index_sets(size)
    ]
    for cid, carrier in ctx.carrier_items():
        if len(carrier) > ctx.options.net_carrier_bound:
            continue
        n = len(carrier)
        for dset in index_sets:
            elems = dset.elements
            for assignment in range(n ** len(elems)):
                values = {}
                a = assignment
                for el in elems:
                    values[el] = a % n
                    a //= n
                net = FiniteNet(dset, carrier, values)
                filt = associated_filter_finite(net)
                for e in carrier.points:
                    net_instances += 1
                    nc = net_converges_finite(net, e, mode)
                    fc = ctx.converges(cid, filt.minset, e, mode)
                    nk = net_cluster_finite(net, e, mode)
                    fk = ctx.clusters(cid, filt.minset, e, mode)
                    if nc != fc or nk != fk:
                        witnesses.append(
                            {
                                "carrier": cid,
                                "values": {el: carrier.points[i].to_json() for el, i in sorted(values.items())},
                                "e": _vec(e),
                                "net_converges": nc,
                                "filter_converges": fc,
                                "net_clusters": nk,
                                "filter_clusters": fk,
                            }
                        )

    for sid, spid, seq in ctx.sequence_items():
        space = ctx.spaces[spid]
        for e in ctx.seq_candidates(spid, seq):
            seq_instances += 1
            sc = seq_converges(seq, e, space, mode)
            fc = filter_converges_seq(seq, e, space, mode)
            kc = cluster_point_seq(seq, e, space, mode)
            if sc != fc or kc != fc:
                witnesses.append(
                    {
                        "sequence": sid,
                        "coeffs": seq.to_json()["coeffs"],
                        "e": _vec(e),
                        "seq_converges": sc,
                        "filter_converges": fc,
                        "clusters": kc,
                    }
                )
    return _finish(
        "THM-NETFILTER",
        mode,
        {"instances": net_instances + seq_instances, "nets": net_instances, "sequences": seq_instances},
        witnesses,
        notes=(
            "sequence cluster tests use the frequently-equals-eventually "
            "reduction valid for polynomial sequences",
        ),
    )


# ---------------------------------------------------------------------------
# Pseudonorm corollary
# ---------------------------------------------------------------------------


def check_COR_PSEUDO(ctx: AuditContext, mode: SemanticsMode) -> Verdict:
    """Filter convergence iff every pseudonorm of the difference tends to zero.

    The right-hand side is semantics-free: it evaluates each pseudonorm on
    the exact limit of x_k - e.  Under TRANSLATED the equivalence is the
    content of the claim; under ZERO_NBHD the check reports every
    divergence instance, with a replayable witnessing radius.
    """
    total = 0
    witnesses: list[dict] = []
    for sid, spid, seq in ctx.sequence_items():
        space = ctx.spaces[spid]
        for e in ctx.seq_candidates(spid, seq):
            total += 1
            left = filter_converges_seq(seq, e, space, mode)
            diff_limit = seq.minus(e).limit_vector()
            right = all(evaluate(rho, diff_limit) == 0 for rho in space.family.members)
            if left != right:
                witness = {
                    "sequence": sid,
                    "coeffs": seq.to_json()["coeffs"],
                    "e": _vec(e),
                    "filter_converges": left,
                    "limits_vanish": right,
                    "limit_of_difference": _vec(diff_limit),
                }
                if left and not right:
                    escape = divergence_radius(seq, e, space, SemanticsMode.TRANSLATED)
                    if escape is not None:
                        j, eps = escape
                        witness["translated_escape"] = [j, format_rational(eps)]
                witnesses.append(witness)
    return _finish("COR-PSEUDO", mode, {"instances": total}, witnesses)


# ---------------------------------------------------------------------------
# Continuity
# ---------------------------------------------------------------------------


def _continuity_pairs(ctx: AuditContext) -> list[tuple[str, str]]:
    if ctx.options.continuity_pairs:
        return list(ctx.options.continuity_pairs)
    pairs = []
    for cid1, c1 in ctx.carrier_items():
        for cid2, c2 in ctx.carrier_items():
            if len(c2) ** len(c1) <= ctx.options.map_count_bound:
                pairs.append((cid1, cid2))
    return pairs


def check_PROP_CONT(ctx: AuditContext, mode: SemanticsMode) -> Verdict:
    """Continuity iff pushforward preserves every convergence, plus the
    neighborhood-filter inclusion for continuous maps."""
    total = 0
    witnesses: list[dict] = []
    for cid1, cid2 in _continuity_pairs(ctx):
        dom = ctx.carriers[cid1]
        cod = ctx.carriers[cid2]
        n2, n1 = len(cod), len(dom)
        if n2 ** n1 > ctx.options.map_count_bound:
            continue
        for assignment in range(n2 ** n1):
            values = []
            a = assignment
            for _ in range(n1):
                values.append(a % n2)
                a //= n2
            f = FiniteMap(dom, cod, tuple(values))
            total += 1
            continuous = check_continuity_finite(f, mode)
            preserved = True
            breaker = None
            for filt in all_principal_filters(dom):
                for e in dom.points:
                    if not ctx.converges(cid1, filt.minset, e, mode):
                        continue
                    pushed = pushforward(f, filt)
                    fe = cod.points[f.apply(dom.index_of(e))]
                    if not ctx.converges(cid2, pushed.minset, fe, mode):
                        preserved = False
                        breaker = (filt.minset, e)
                        break
                if not preserved:
                    break
            ok = continuous == preserved
            if ok and continuous:
                # the neighborhood filter of f(e) sits inside the pushed
                # neighborhood filter of e
                for e in dom.points:
                    fe = cod.points[f.apply(dom.index_of(e))]
                    nmin_dom = minimal_restricted_neighborhood(dom, e, mode)
                    nmin_cod = minimal_restricted_neighborhood(cod, fe, mode)
                    if not nmin_dom <= f.preimage(nmin_cod):
                        ok = False
                        breaker = (nmin_dom, e)
                        break
            if not ok:
                witness = {
                    "domain": cid1,
                    "codomain": cid2,
                    "map": values,
                    "continuous": continuous,
                    "preserves_convergence": preserved,
                }
                if breaker:
                    witness["filter"] = _set(dom, breaker[0])
                    witness["e"] = _vec(breaker[1])
                witnesses.append(witness)
    return _finish("PROP-CONT", mode, {"instances": total}, witnesses)


# ---------------------------------------------------------------------------
# Bare neighborhood-collection filterhood
# ---------------------------------------------------------------------------


def check_EX2_FILTERHOOD(ctx: AuditContext, mode: SemanticsMode) -> Verdict:
    """Does the literal collection of qualifying restricted neighborhoods of e
    satisfy the filter axioms without taking the upward closure?"""
    total = 0
    witnesses: list[dict] = []
    upclosed_ok = 0
    for cid, carrier in ctx.carrier_items():
        if len(carrier) > ctx.options.exhaustive_carrier_bound:
            continue
        subsets = list(carrier.all_subsets())
        for e in carrier.points:
            total += 1
            literal = set(ctx.nbhds(cid, e, mode))
            failure = None
            if frozenset() in literal:
                failure = {"axiom": "excludes-empty-set"}
            if failure is None:
                for s in sorted(literal, key=sorted):
                    sup_t = next(
                        (t for t in subsets if s <= t and t not in literal), None
                    )
                    if sup_t is not None:
                        failure = {
                            "axiom": "upward-closure",
                            "member": _set(carrier, s),
                            "superset": _set(carrier, sup_t),
                        }
                        break
            if failure is None:
                ordered = sorted(literal, key=sorted)
                for s in ordered:
                    for t in ordered:
                        if s & t not in literal:
                            failure = {
                                "axiom": "intersection-closure",
                                "members": [_set(carrier, s), _set(carrier, t)],
                            }
                            break
                    if failure:
                        break
            if failure is not None:
                witnesses.append({"carrier": cid, "e": _vec(e), **failure})
            # the up-closed version must always pass
            try:
                nf = neighborhood_filter(carrier, e, mode)
                family = {t for t in subsets if nf.member(t)}
                if _family_is_filter(carrier, family) is None:
                    upclosed_ok += 1
            except ConstructionError:
                pass
    return _finish(
        "EX2-FILTERHOOD",
        mode,
        {"instances": total, "upclosed_pass": upclosed_ok},
        witnesses,
        notes=(
            "witnesses show the literal collection failing an axiom; the "
            "up-closed neighborhood filter passes on every instance",
        ),
    )


# ---------------------------------------------------------------------------
# Axiom audits over declared objects
# ---------------------------------------------------------------------------


def _derived_specs(space: SpaceSpec, rng: random.Random) -> list[NeighborhoodSpec]:
    specs = [NeighborhoodSpec(((j, Fraction(1)),)) for j in range(len(space.family))]
    specs.append(
        NeighborhoodSpec(tuple((j, Fraction(1, 2)) for j in range(len(space.family))))
    )
    for _ in range(2):
        specs.append(
            NeighborhoodSpec(
                tuple(
                    (j, Fraction(rng.randint(1, 12), rng.randint(1, 6)))
                    for j in range(len(space.family))
                )
            )
        )
    return specs


def check_BASE_AXIOMS(ctx: AuditContext, mode: SemanticsMode) -> Verdict:
    total = 0
    witnesses: list[dict] = []
    rng = ctx.rng("base-axioms")
    for spid, space in sorted(ctx.spaces.items()):
        records = audit_base_axioms(space, _derived_specs(space, rng), rng=rng)
        for record in records:
            total += 1
            if not record.ok:
                witnesses.append({"space": spid, **record.to_json()})
    return _finish("BASE-AXIOMS", mode, {"instances": total}, witnesses)


def check_PSEUDO_AXIOMS(ctx: AuditContext, mode: SemanticsMode) -> Verdict:
    total = 0
    witnesses: list[dict] = []
    rng = ctx.rng("pseudonorm-axioms")
    for spid, space in sorted(ctx.spaces.items()):
        pairs = []
        for _ in range(120):
            pairs.append(
                (
                    RationalVector(
                        tuple(
                            Fraction(rng.randint(-20, 20), rng.randint(1, 10))
                            for _ in range(space.dim)
                        )
                    ),
                    RationalVector(
                        tuple(
                            Fraction(rng.randint(-20, 20), rng.randint(1, 10))
                            for _ in range(space.dim)
                        )
                    ),
                )
            )
        for j, rho in enumerate(space.family.members):
            total += 1
            verdict = audit_pseudonorm_axioms(
                rho, pairs, scalars=[Fraction(1, 2), Fraction(-2, 3)]
            )
            if verdict.status != Status.HOLDS:
                witnesses.append(
                    {"space": spid, "pseudonorm": j, "violations": list(verdict.witnesses)}
                )
    return _finish("PSEUDO-AXIOMS", mode, {"instances": total}, witnesses)


# ---------------------------------------------------------------------------
# Orchestration
# ---------------------------------------------------------------------------

CHECKS: dict[str, Callable[[AuditContext, SemanticsMode], Verdict]] = {
    "BASE-AXIOMS": check_BASE_AXIOMS,
    "COR-PSEUDO": check_COR_PSEUDO,
    "EX2-FILTERHOOD": check_EX2_FILTERHOOD,
    "PROP-CONT": check_PROP_CONT,
    "PROP1a": check_PROP1a,
    "PROP1b": check_PROP1b,
    "PROP2": check_PROP2,
    "PROP3": check_PROP3,
    "PSEUDO-AXIOMS": check_PSEUDO_AXIOMS,
    "REM1": check_REM1,
    "REM2": check_REM2,
    "THM-CLUSTER": check_THM_CLUSTER,
    "THM-JOIN": check_THM_JOIN,
    "THM-MEET": check_THM_MEET,
    "THM-NETFILTER": check_THM_NETFILTER,
}


def run_audit(
    ctx: AuditContext,
    corpus_sha: str,
    modes: tuple[SemanticsMode, ...] = MODE_ORDER,
    claim_ids: tuple[str, ...] = CLAIM_IDS,
) -> AuditReport:
    """Run every selected claim under every selected mode, deterministically."""
    start = time.monotonic()
    verdicts: list[Verdict] = []
    for claim_id in sorted(claim_ids):
        check = CHECKS[claim_id]
        for mode in modes:
            verdicts.append(check(ctx, mode))
    runtime_ms = int((time.monotonic() - start) * 1000)
    return AuditReport(
        claims=tuple(verdicts),
        corpus_sha=corpus_sha,
        seed=ctx.seed,
        runtime_ms=runtime_ms,
    )
