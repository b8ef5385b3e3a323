"""Corpus files: one JSON document declaring every object an audit touches.

Schema (version 1):

    {
      "version": 1,
      "seed": 1729,
      "spaces":    {"S1": {"dim": 1, "pseudonorms": [{"kind": "coord", "j": 0}]}},
      "carriers":  {"WA": {"space": "S1", "points": [["-1"], ["0"]]}},
      "sequences": {"q0": {"space": "S1", "coeffs": [["0", "1"]]}},
      "filters":   {"F1": {"principal": {"carrier": "WA", "minset": [0]}}},
      "nets":      {"n1": {"carrier": "WA", "index": ["a", "b"],
                           "order": [["a", "b"]], "values": {"a": 0, "b": 1}}},
      "maps":      {"m1": {"domain": "WA", "codomain": "WA", "values": [0, 1]}},
      "claims":    ["REM1"],
      "options":   {"random_sequences": 0}
    }

Rationals are "p/q" strings (q omitted when 1); vectors are arrays of
such strings; sequence coefficients are per-coordinate lists with the
constant term first; carrier points are referenced by index elsewhere.
Filter forms: principal | tail | nbhd | generated | join | meet |
pushforward.  Parse errors carry the offending field path.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

from .claims import CLAIM_IDS, AuditContext, AuditOptions
from .lattice import RationalVector, as_rational
from .topology import (
    PseudonormFamily,
    SemanticsMode,
    SpaceSpec,
    pseudonorm_from_json,
)
from .finite import FiniteCarrier, FiniteDirectedSet, FiniteMap, FiniteNet
from .filters import (
    FilterBase,
    PrincipalFilter,
    generate,
    join_filter,
    meet_filter,
    neighborhood_filter,
    pushforward,
)
from .sequences import PolySequence, SequenceTailFilter, associated_filter_seq

DEFAULT_SEED = 1729
SCHEMA_VERSION = 1


class CorpusError(ValueError):
    """A corpus file failed schema validation or cross-reference resolution."""


@dataclass
class Corpus:
    """Parsed and resolved corpus, plus the raw bytes for fingerprinting."""

    path: Path | None
    raw: dict
    sha256: str
    seed: int
    spaces: dict[str, SpaceSpec]
    carriers: dict[str, FiniteCarrier]
    sequences: dict[str, tuple[str, PolySequence]]
    net_specs: dict[str, dict]
    map_specs: dict[str, dict]
    filter_specs: dict[str, dict]
    claims: tuple[str, ...]
    options: AuditOptions

    def context(self, seed: int | None = None) -> AuditContext:
        """Audit context with every net and map built (and so validated)."""
        nets = {nid: self.build_net(nid) for nid in sorted(self.net_specs)}
        maps = {mid: self.build_map(mid) for mid in sorted(self.map_specs)}
        return AuditContext(
            spaces=self.spaces,
            carriers=self.carriers,
            sequences=self.sequences,
            nets=nets,
            maps=maps,
            options=self.options,
            seed=self.seed if seed is None else seed,
        )

    def build_net(self, net_id: str) -> FiniteNet:
        spec = self.net_specs[net_id]
        where = f"nets.{net_id}"
        carrier = self._carrier(spec, where)
        elements = tuple(str(e) for e in spec.get("index", ()))
        if not elements:
            raise CorpusError(f"{where}.index: must list the index elements")
        pairs = [(str(a), str(b)) for a, b in spec.get("order", ())]
        index = FiniteDirectedSet.from_pairs(elements, pairs)
        values = {str(k): int(v) for k, v in spec.get("values", {}).items()}
        return FiniteNet(index, carrier, values)

    def build_map(self, map_id: str) -> FiniteMap:
        spec = self.map_specs[map_id]
        where = f"maps.{map_id}"
        dom = self._named_carrier(spec.get("domain"), f"{where}.domain")
        cod = self._named_carrier(spec.get("codomain"), f"{where}.codomain")
        values = tuple(int(v) for v in spec.get("values", ()))
        return FiniteMap(dom, cod, values)

    def build_filter(self, filter_id: str):
        """Construct a declared filter value; construction errors propagate."""
        if filter_id not in self.filter_specs:
            raise CorpusError(f"unknown filter id: {filter_id}")
        spec = self.filter_specs[filter_id]
        where = f"filters.{filter_id}"
        if "principal" in spec:
            body = spec["principal"]
            carrier = self._named_carrier(body.get("carrier"), f"{where}.carrier")
            minset = frozenset(int(i) for i in body.get("minset", ()))
            return PrincipalFilter(carrier, minset)
        if "generated" in spec:
            body = spec["generated"]
            carrier = self._named_carrier(body.get("carrier"), f"{where}.carrier")
            elements = tuple(
                frozenset(int(i) for i in elem) for elem in body.get("base", ())
            )
            return generate(FilterBase(carrier, elements))
        if "tail" in spec:
            sid = spec["tail"].get("sequence")
            if sid not in self.sequences:
                raise CorpusError(f"{where}.tail.sequence: unknown sequence {sid!r}")
            spid, seq = self.sequences[sid]
            return associated_filter_seq(seq, self.spaces[spid])
        if "nbhd" in spec:
            body = spec["nbhd"]
            carrier = self._named_carrier(body.get("carrier"), f"{where}.carrier")
            center = RationalVector.from_json(body["center"])
            mode = SemanticsMode.parse(body.get("mode", "zero"))
            return neighborhood_filter(carrier, center, mode)
        if "join" in spec:
            f1, f2 = (self.build_filter(str(i)) for i in spec["join"])
            return join_filter(f1, f2)
        if "meet" in spec:
            f1, f2 = (self.build_filter(str(i)) for i in spec["meet"])
            return meet_filter(f1, f2)
        if "pushforward" in spec:
            body = spec["pushforward"]
            inner = self.build_filter(str(body.get("filter")))
            return pushforward(self.build_map(str(body.get("map"))), inner)
        raise CorpusError(f"{where}: unknown filter form {sorted(spec)}")

    def space_of_filter(self, filter_id: str) -> SpaceSpec:
        filt = self.build_filter(filter_id)
        if isinstance(filt, PrincipalFilter):
            return filt.carrier.space
        if isinstance(filt, SequenceTailFilter):
            return filt.space
        raise CorpusError(f"filters.{filter_id}: no space attached")

    def _carrier(self, spec: dict, where: str) -> FiniteCarrier:
        return self._named_carrier(spec.get("carrier"), f"{where}.carrier")

    def _named_carrier(self, cid: object, where: str) -> FiniteCarrier:
        if not isinstance(cid, str) or cid not in self.carriers:
            raise CorpusError(f"{where}: unknown carrier {cid!r}")
        return self.carriers[cid]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise CorpusError(message)


def parse_corpus(data: dict, raw_bytes: bytes, path: Path | None = None) -> Corpus:
    _require(isinstance(data, dict), "corpus root must be a JSON object")
    version = data.get("version")
    _require(
        version == SCHEMA_VERSION,
        f"version: expected {SCHEMA_VERSION}, got {version!r}",
    )
    seed = int(data.get("seed", DEFAULT_SEED))

    spaces: dict[str, SpaceSpec] = {}
    for spid, body in sorted(dict(data.get("spaces", {})).items()):
        where = f"spaces.{spid}"
        try:
            dim = int(body["dim"])
            norms = tuple(
                pseudonorm_from_json(p, dim=dim) for p in body["pseudonorms"]
            )
            spaces[spid] = SpaceSpec(dim, PseudonormFamily(norms))
        except CorpusError:
            raise
        except Exception as exc:
            raise CorpusError(f"{where}: {exc}") from exc
    _require(bool(spaces), "spaces: at least one space is required")

    carriers: dict[str, FiniteCarrier] = {}
    for cid, body in sorted(dict(data.get("carriers", {})).items()):
        where = f"carriers.{cid}"
        spid = body.get("space")
        _require(spid in spaces, f"{where}.space: unknown space {spid!r}")
        try:
            points = tuple(RationalVector.from_json(p) for p in body["points"])
            carriers[cid] = FiniteCarrier(points, spaces[spid])
        except CorpusError:
            raise
        except Exception as exc:
            raise CorpusError(f"{where}: {exc}") from exc

    sequences: dict[str, tuple[str, PolySequence]] = {}
    for sid, body in sorted(dict(data.get("sequences", {})).items()):
        where = f"sequences.{sid}"
        spid = body.get("space")
        _require(spid in spaces, f"{where}.space: unknown space {spid!r}")
        try:
            seq = PolySequence.from_json(body)
        except Exception as exc:
            raise CorpusError(f"{where}: {exc}") from exc
        _require(
            seq.dim == spaces[spid].dim,
            f"{where}: sequence dim {seq.dim} does not match space {spid}",
        )
        sequences[sid] = (spid, seq)

    claims = tuple(data.get("claims", CLAIM_IDS))
    for claim in claims:
        _require(claim in CLAIM_IDS, f"claims: unknown claim id {claim!r}")
    _require(
        bool(carriers) or bool(sequences),
        "empty corpus: no carriers and no sequences declared",
    )

    options = AuditOptions.from_json(dict(data.get("options", {})))

    return Corpus(
        path=path,
        raw=data,
        sha256=hashlib.sha256(raw_bytes).hexdigest(),
        seed=seed,
        spaces=spaces,
        carriers=carriers,
        sequences=sequences,
        net_specs={str(k): dict(v) for k, v in dict(data.get("nets", {})).items()},
        map_specs={str(k): dict(v) for k, v in dict(data.get("maps", {})).items()},
        filter_specs={str(k): dict(v) for k, v in dict(data.get("filters", {})).items()},
        claims=claims,
        options=options,
    )


def load_corpus(path: str | Path) -> Corpus:
    p = Path(path)
    try:
        raw_bytes = p.read_bytes()
    except OSError as exc:
        raise CorpusError(f"cannot read corpus file {p}: {exc}") from exc
    try:
        data = json.loads(raw_bytes.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise CorpusError(f"{p}: not valid UTF-8 JSON: {exc}") from exc
    return parse_corpus(data, raw_bytes, path=p)
