"""Decision procedure: which invariant distinguishes two surgeries on a knot.

Given a knot record and two slopes of the same sign (infinity allowed on
either side), the checks run in the cheapest-first order that the
cancellation structure of the surgery formulas permits: first homology,
then the Casson-Gordon comparison (the knot signature term cancels for
equal p, so no signatures are ever computed here), then Casson-Walker via
the second derivative of the Alexander polynomial, then hat-homology ranks
when knot Floer data is present.  Negative slope pairs are rewritten as
positive pairs on the mirror record before anything else happens.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, replace
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .dedekind import dedekind_sum
from .hfcone import KnotFloerData, cone_rank_oracle, mirror_of, nu_of, rank_formula
from .knots import (
    NotLSpaceFormError,
    SeifertMatrix,
    SymLaurentPoly,
    alexander_from_seifert,
    delta2_at_one,
    parse_lspace_form,
    sigma_total,
)
from .surgery import AmbientData, Slope, casson_walker_surgered

__all__ = [
    "DIFFERENT_HOMOLOGY",
    "BY_CASSON_GORDON",
    "BY_CASSON_WALKER",
    "BY_HF_RANK",
    "UNKNOT_COSMETIC",
    "INCONCLUSIVE",
    "Verdict",
    "KnotRecord",
    "SweepRow",
    "SweepReport",
    "distinguish",
    "sweep",
    "load_knots",
    "mirror_record",
    "full_invariants",
    "bundled_corpus_path",
]

DIFFERENT_HOMOLOGY = "DifferentHomology"
BY_CASSON_GORDON = "DistinguishedByCassonGordon"
BY_CASSON_WALKER = "DistinguishedByCassonWalker"
BY_HF_RANK = "DistinguishedByHFRank"
UNKNOT_COSMETIC = "UnknotCosmetic"
INCONCLUSIVE = "Inconclusive"

_WITNESSED_TAGS = (DIFFERENT_HOMOLOGY, BY_CASSON_GORDON, BY_CASSON_WALKER, BY_HF_RANK)


@dataclass(frozen=True)
class Verdict:
    """Outcome of the obstruction: the distinguishing invariant, with the
    two witnessing values, or a cosmetic/inconclusive signal."""

    tag: str
    value1: object = None
    value2: object = None

    def __post_init__(self):
        if self.tag in _WITNESSED_TAGS and self.value1 == self.value2:
            raise ValueError(f"verdict {self.tag} needs two distinct witnesses")


@dataclass(frozen=True)
class KnotRecord:
    """A knot with whatever invariant inputs are on file for it.

    The Alexander polynomial is always populated (derived from the Seifert
    matrix when not given directly); Seifert and knot Floer data are
    optional, as are the tau/nu annotations used for cross-checks.
    """

    name: str
    alexander: SymLaurentPoly
    seifert: SeifertMatrix | None = None
    hf: KnotFloerData | None = None
    ambient: AmbientData = AmbientData()
    tau: int | None = None
    nu: int | None = None
    trivial: bool = False

    @property
    def delta2(self) -> int:
        return delta2_at_one(self.alexander)


def mirror_record(record: KnotRecord) -> KnotRecord:
    """Record of the mirror knot in the orientation-reversed ambient manifold."""
    return replace(
        record,
        name=f"mirror({record.name})",
        seifert=record.seifert.mirror() if record.seifert is not None else None,
        hf=mirror_of(record.hf) if record.hf is not None else None,
        ambient=record.ambient.negated(),
        tau=-record.tau if record.tau is not None else None,
        nu=None,
    )


def _check_pair(s1: Slope, s2: Slope) -> int:
    """Validate a slope pair and return -1 if it needs mirroring, else +1."""
    if s1 == s2:
        raise ValueError("the two slopes must be distinct")
    signs = set()
    for s in (s1, s2):
        if s.is_infinite:
            continue
        if s.p == 0:
            raise ValueError("0-surgery is not a rational homology sphere; slope 0 rejected")
        signs.add(1 if s.p > 0 else -1)
    if len(signs) == 2:
        raise ValueError("mixed-sign slope pairs are outside the obstruction's hypothesis")
    return signs.pop() if signs else 1


def distinguish(record: KnotRecord, s1: Slope, s2: Slope) -> Verdict:
    """Find the invariant separating the two surgered manifolds.

    For pairs of negative slopes the question is transported to the mirror
    knot with positive slopes, so reported witnesses are the invariants of
    the mirrored surgeries.
    """
    sign = _check_pair(s1, s2)
    if sign < 0:
        return distinguish(mirror_record(record), s1.negated(), s2.negated())
    if abs(s1.p) != abs(s2.p):
        return Verdict(DIFFERENT_HOMOLOGY, abs(s1.p), abs(s2.p))
    p = s1.p
    d1 = dedekind_sum(s1.q, p)
    d2 = dedekind_sum(s2.q, p)
    if d1 != d2:
        return Verdict(BY_CASSON_GORDON, -4 * p * d1, -4 * p * d2)
    delta2 = record.delta2
    if delta2 != 0:
        lam1 = casson_walker_surgered(record.ambient, delta2, s1)
        lam2 = casson_walker_surgered(record.ambient, delta2, s2)
        return Verdict(BY_CASSON_WALKER, lam1, lam2)
    if record.hf is not None:
        # Infinite surgery returns the ambient integral homology L-space,
        # whose hat homology has rank 1.
        r1 = 1 if s1.is_infinite else rank_formula(record.hf, s1)
        r2 = 1 if s2.is_infinite else rank_formula(record.hf, s2)
        if r1 != r2:
            return Verdict(BY_HF_RANK, r1, r2)
    try:
        form = parse_lspace_form(record.alexander)
    except NotLSpaceFormError:
        return Verdict(INCONCLUSIVE)
    if form.exponents:
        raise ArithmeticError(
            "alternating Alexander form with nonzero top term cannot reach this step"
        )
    return Verdict(UNKNOT_COSMETIC)


def full_invariants(record: KnotRecord, slope: Slope):
    """All computable invariants of one surgered manifold, decision-free.

    Returns (casson_walker, casson_gordon_or_None, hf_rank_or_None); the
    Casson-Gordon value needs a Seifert matrix for the signature term and
    the rank needs knot Floer data.
    """
    lam = casson_walker_surgered(record.ambient, record.delta2, slope)
    tau = None
    if record.seifert is not None:
        sig = sigma_total(record.seifert, abs(slope.p))
        tau = -4 * slope.p * dedekind_sum(slope.q, slope.p) - sig
    rank = None
    if record.hf is not None:
        if slope.is_infinite:
            rank = 1  # the ambient manifold is an integral homology L-space
        else:
            rank = cone_rank_oracle(record.hf, slope, verify_stability=False)
    return lam, tau, rank


@dataclass(frozen=True)
class SweepRow:
    name: str
    p: int
    q1: int
    q2: int
    tag: str
    witness1: object
    witness2: object


@dataclass(frozen=True)
class SweepReport:
    rows: tuple[SweepRow, ...]
    counts: dict
    nontrivial_inconclusive: int

    def csv_lines(self):
        yield "name,p,q1,q2,tag,witness1,witness2"
        for r in self.rows:
            w1 = "" if r.witness1 is None else str(r.witness1)
            w2 = "" if r.witness2 is None else str(r.witness2)
            yield f"{r.name},{r.p},{r.q1},{r.q2},{r.tag},{w1},{w2}"


def _slope_group(p_signed: int, q_max: int):
    """All reduced slopes with the given signed p, plus infinity when |p| = 1."""
    slopes = []
    if abs(p_signed) == 1:
        slopes.append(Slope(1, 0))
    for q in range(1, q_max + 1):
        if math.gcd(p_signed, q) == 1:
            slopes.append(Slope(p_signed, q))
    return slopes


def sweep(records, p_max: int, q_max: int) -> SweepReport:
    """Run distinguish over every same-sign slope pair with equal |p|.

    Pairs are grouped by the signed surgery coefficient p with 1 <= |p| <=
    p_max and 0 <= q <= q_max; the infinite slope joins the |p| = 1 groups
    with q recorded as 0.  Output rows are sorted by (p, q1, q2) within
    each record, so the report is deterministic however the pairs are
    evaluated.
    """
    if p_max < 1 or q_max < 1:
        raise ValueError("p_max and q_max must be >= 1")
    if isinstance(records, KnotRecord):
        records = [records]
    rows = []
    counts: Counter = Counter()
    bad = 0
    for record in records:
        record_rows = []
        for p_signed in [p for p in range(-p_max, p_max + 1) if p != 0]:
            group = _slope_group(p_signed, q_max)
            for a in range(len(group)):
                for b in range(a + 1, len(group)):
                    s1, s2 = group[a], group[b]
                    verdict = distinguish(record, s1, s2)
                    record_rows.append(
                        SweepRow(
                            record.name,
                            p_signed,
                            s1.q,
                            s2.q,
                            verdict.tag,
                            verdict.value1,
                            verdict.value2,
                        )
                    )
                    counts[verdict.tag] += 1
                    if verdict.tag == INCONCLUSIVE and not record.trivial:
                        bad += 1
        record_rows.sort(key=lambda r: (r.p, r.q1, r.q2))
        rows.extend(record_rows)
    return SweepReport(tuple(rows), dict(counts), bad)


# ---------------------------------------------------------------------------
# Corpus files.


def bundled_corpus_path() -> Path:
    """Path of the knot corpus shipped with the package."""
    return Path(resources.files("dehnsurg").joinpath("data", "knots.json"))


def _parse_fraction(value) -> Fraction:
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, int):
        return Fraction(value)
    raise ValueError(f"expected an integer or 'a/b' string, got {value!r}")


def _record_from_dict(raw: dict, context: str) -> KnotRecord:
    def fail(msg):
        raise ValueError(f"{context}: {msg}")

    if not isinstance(raw, dict):
        fail("record must be a JSON object")
    name = raw.get("name")
    if not isinstance(name, str) or not name:
        fail("missing or empty 'name'")
    seifert = None
    if "seifert_matrix" in raw:
        try:
            seifert = SeifertMatrix(raw["seifert_matrix"])
        except (TypeError, ValueError) as e:
            fail(f"bad seifert_matrix: {e}")
    alexander = None
    if "alexander" in raw:
        spec = raw["alexander"]
        try:
            alexander = SymLaurentPoly(spec["a0"], spec.get("a", ()))
        except (TypeError, KeyError, ValueError) as e:
            fail(f"bad alexander polynomial: {e}")
    if seifert is None and alexander is None:
        fail("need at least one of 'seifert_matrix' or 'alexander'")
    if seifert is not None:
        derived = alexander_from_seifert(seifert)
        if alexander is not None and alexander != derived:
            fail(
                f"alexander polynomial {alexander} does not match the one "
                f"derived from the Seifert matrix, {derived}"
            )
        alexander = derived
    hf = None
    if "hf" in raw:
        try:
            hf = KnotFloerData.from_json_dict(raw["hf"])
        except (TypeError, ValueError) as e:
            fail(f"bad hf data: {e}")
    tau = raw.get("tau")
    nu = raw.get("nu")
    if hf is not None:
        model_nu = nu_of(hf)
        if nu is not None and nu != model_nu:
            fail(f"declared nu = {nu} but the hf data has nu = {model_nu}")
        if tau is not None and model_nu not in (tau, tau + 1):
            fail(f"nu = {model_nu} violates the bracket {{tau, tau+1}} for tau = {tau}")
    ambient = AmbientData(
        _parse_fraction(raw.get("lambda_ambient", 0)), raw.get("ambient", "S3")
    )
    return KnotRecord(
        name=name,
        alexander=alexander,
        seifert=seifert,
        hf=hf,
        ambient=ambient,
        tau=tau,
        nu=nu,
        trivial=bool(raw.get("trivial", False)),
    )


def load_knots(path) -> list[KnotRecord]:
    """Load and validate a JSON list of knot records."""
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"{path}: not valid JSON: {e}") from None
    if not isinstance(data, list):
        raise ValueError(f"{path}: top level must be a JSON list of records")
    records = []
    seen = set()
    for i, raw in enumerate(data):
        name = raw.get("name", "?") if isinstance(raw, dict) else "?"
        record = _record_from_dict(raw, f"{path}: record {i} ({name})")
        if record.name in seen:
            raise ValueError(f"{path}: duplicate record name {record.name!r}")
        seen.add(record.name)
        records.append(record)
    return records
