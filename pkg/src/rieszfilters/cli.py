"""Command-line front end: audits, ad-hoc convergence queries, axiom tables.

Exit status: 0 when every selected check matches the expected-verdict
manifest (or nothing to compare), 1 on a mismatch or a failed query, 2 on
input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .claims import CLAIM_IDS, MODE_ORDER, _derived_specs, run_audit
from .corpus import Corpus, CorpusError, load_corpus
from .filters import (
    ConstructionError,
    PrincipalFilter,
    converges_finite,
    convergence_witness,
)
from .finite import DirectednessError, enumerate_restricted_neighborhoods
from .lattice import RationalVector, as_rational, format_rational
from .sequences import SequenceTailFilter, divergence_radius, filter_converges_seq
from .topology import SemanticsMode, audit_base_axioms, audit_pseudonorm_axioms
from .verdict import Status

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _parse_modes(text: str) -> tuple[SemanticsMode, ...]:
    if text == "both":
        return MODE_ORDER
    return (SemanticsMode.parse(text),)


def _parse_point(text: str, dim: int) -> RationalVector:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != dim:
        raise CorpusError(f"--point: expected {dim} coordinates, got {len(parts)}")
    return RationalVector.from_iter(as_rational(p) for p in parts)


def _load(path: str) -> Corpus:
    return load_corpus(path)


def cmd_audit(args: argparse.Namespace) -> int:
    try:
        corpus = _load(args.corpus)
        ctx = corpus.context(seed=args.seed)
        # construct every declared filter up front so broken declarations
        # surface as usage errors with their axiom named
        for fid in sorted(corpus.filter_specs):
            corpus.build_filter(fid)
    except (CorpusError, ConstructionError, DirectednessError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    claim_ids = corpus.claims if args.claims is None else tuple(args.claims)
    report = run_audit(
        ctx,
        corpus_sha=corpus.sha256,
        modes=_parse_modes(args.semantics),
        claim_ids=claim_ids,
    )

    payload = report.to_json_bytes() if args.report == "json" else report.to_text().encode()
    if args.out:
        Path(args.out).write_bytes(payload)
    else:
        sys.stdout.write(payload.decode("utf-8"))
    print(f"audit runtime: {report.runtime_ms} ms", file=sys.stderr)

    manifest_path = args.manifest
    if manifest_path is None:
        candidate = Path(args.corpus).with_suffix(".expected.json")
        manifest_path = str(candidate) if candidate.exists() else None
    if manifest_path is None:
        return EXIT_OK
    try:
        expected = Path(manifest_path).read_bytes()
    except OSError as exc:
        print(f"error: cannot read manifest: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if expected == report.to_json_bytes():
        print("manifest: match", file=sys.stderr)
        return EXIT_OK
    print("manifest: MISMATCH against expected verdicts", file=sys.stderr)
    return EXIT_MISMATCH


def cmd_converge(args: argparse.Namespace) -> int:
    try:
        corpus = _load(args.corpus)
        filt = corpus.build_filter(args.filter)
        space = corpus.space_of_filter(args.filter)
        point = _parse_point(args.point, space.dim)
        mode = SemanticsMode.parse(args.semantics)
    except (CorpusError, ConstructionError, DirectednessError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if isinstance(filt, PrincipalFilter):
        result = converges_finite(filt, point, mode)
        print("true" if result else "false")
        if result:
            nbhds = enumerate_restricted_neighborhoods(filt.carrier, point, mode)
            minimal = min(nbhds, key=len)
            print(
                f"qualifying neighborhood sets: {len(nbhds)}; "
                f"minimal has {len(minimal)} points: "
                + json.dumps([p.to_json() for p in filt.carrier.subset_points(minimal)])
            )
        else:
            entry = convergence_witness(filt, point, mode)
            print(
                "witness neighborhood: "
                + json.dumps(
                    {
                        "spec": entry.spec.to_json(),
                        "restricted": [
                            p.to_json()
                            for p in filt.carrier.subset_points(entry.members)
                        ],
                    },
                    sort_keys=True,
                )
            )
        return EXIT_OK if result else EXIT_MISMATCH

    if isinstance(filt, SequenceTailFilter):
        result = filter_converges_seq(filt.seq, point, space, mode)
        print("true" if result else "false")
        if not result:
            escape = divergence_radius(filt.seq, point, space, mode)
            if escape is not None:
                j, eps = escape
                print(
                    "witness neighborhood: "
                    + json.dumps(
                        {"pseudonorm": j, "radius": format_rational(eps)},
                        sort_keys=True,
                    )
                )
        return EXIT_OK if result else EXIT_MISMATCH

    print(f"error: filter {args.filter} does not support convergence queries",
          file=sys.stderr)
    return EXIT_USAGE


def cmd_axioms(args: argparse.Namespace) -> int:
    try:
        corpus = _load(args.corpus)
    except CorpusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    rows: list[tuple[str, str, str, str]] = []
    failed = False
    rng = random.Random(f"{corpus.seed}:axioms")
    for spid, space in sorted(corpus.spaces.items()):
        pairs = [
            (
                RationalVector.from_iter(
                    str(rng.randint(-12, 12)) for _ in range(space.dim)
                ),
                RationalVector.from_iter(
                    str(rng.randint(-12, 12)) for _ in range(space.dim)
                ),
            )
            for _ in range(80)
        ]
        for j, rho in enumerate(space.family.members):
            verdict = audit_pseudonorm_axioms(rho, pairs)
            ok = verdict.status == Status.HOLDS
            failed |= not ok
            detail = "" if ok else json.dumps(list(verdict.witnesses)[:1])
            rows.append((f"pseudonorm {spid}[{j}]", "five axioms", "pass" if ok else "FAIL", detail))
        for record in audit_base_axioms(space, _derived_specs(space, rng), rng=rng):
            failed |= not record.ok
            rows.append(
                (
                    f"base {spid}",
                    record.axiom,
                    "pass" if record.ok else "FAIL",
                    json.dumps(record.witness.to_json(), sort_keys=True),
                )
            )

    for fid in sorted(corpus.filter_specs):
        try:
            corpus.build_filter(fid)
            rows.append((f"filter {fid}", "filter axioms", "pass", ""))
        except (ConstructionError, CorpusError) as exc:
            failed = True
            rows.append((f"filter {fid}", "filter axioms", "FAIL", str(exc)))

    for nid in sorted(corpus.net_specs):
        try:
            corpus.build_net(nid)
            rows.append((f"net {nid}", "directedness", "pass", ""))
        except (DirectednessError, CorpusError, ValueError) as exc:
            failed = True
            rows.append((f"net {nid}", "directedness", "FAIL", str(exc)))

    width = max(len(r[0]) for r in rows) if rows else 10
    print(f"{'object':<{width}}  {'check':<24} result  witness")
    print("-" * (width + 50))
    for name, check, result, detail in rows:
        print(f"{name:<{width}}  {check:<24} {result:<7} {detail}")
    return EXIT_MISMATCH if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rieszfilters",
        description=(
            "Audit filter-convergence claims on locally solid vector "
            "lattices over exact rationals."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_audit = sub.add_parser("audit", help="run claim checks over a corpus")
    p_audit.add_argument("corpus", help="path to a corpus JSON file")
    p_audit.add_argument(
        "--semantics", choices=["zero", "translated", "both"], default="both"
    )
    p_audit.add_argument("--report", choices=["json", "text"], default="json")
    p_audit.add_argument("--out", help="write the report here instead of stdout")
    p_audit.add_argument("--seed", type=int, default=None, help="override the corpus seed")
    p_audit.add_argument(
        "--manifest",
        default=None,
        help="expected-verdict manifest to compare against "
        "(default: <corpus>.expected.json when present)",
    )
    p_audit.add_argument(
        "--claims",
        nargs="+",
        choices=list(CLAIM_IDS),
        default=None,
        help="restrict to these claim ids",
    )
    p_audit.set_defaults(func=cmd_audit)

    p_conv = sub.add_parser("converge", help="query one filter against one point")
    p_conv.add_argument("corpus")
    p_conv.add_argument("--filter", required=True, help="filter id from the corpus")
    p_conv.add_argument(
        "--point", required=True, help='comma-separated rationals, e.g. "-1" or "1/2,0"'
    )
    p_conv.add_argument("--semantics", choices=["zero", "translated"], default="zero")
    p_conv.set_defaults(func=cmd_converge)

    p_ax = sub.add_parser("axioms", help="audit declared pseudonorms, bases, filters, nets")
    p_ax.add_argument("corpus")
    p_ax.set_defaults(func=cmd_axioms)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
