"""Fixture files: number-field curve data with an expected torsion order.

A fixture names a tower of generators by their minimal polynomials,
gives the (b, c) parameters of a Tate curve as nested coordinate arrays
over that tower, and states the order that (0, 0) must have.  Files use
brace/bracket object notation with all rationals as strings; emission is
canonical, so loading a shipped file and re-serializing it reproduces
the bytes exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .curves import TateParams, tate_curve, verify_order
from .fields import (
    FieldDescriptor,
    FieldError,
    ShapeError,
    format_rational,
    parse_rational,
)
from .polys import certify_irreducible_over_q


class FixtureError(Exception):
    """A fixture file or record that cannot be accepted, with its location."""

    def __init__(self, message, location=None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


@dataclass(frozen=True)
class Fixture:
    """One curve/point/order claim over an explicit number field."""

    label: str
    n: int
    generators: tuple
    b: tuple
    c: tuple
    expected_order: int
    gonality: object = None
    note: object = None

    def descriptor(self):
        return FieldDescriptor.rationals(
            [(name, [parse_rational(s) for s in minpoly]) for name, minpoly in self.generators]
        )

    def params(self):
        """The TateParams over the fixture's field; validates array shapes."""
        desc = self.descriptor()
        b = desc.from_coords(_untuple(self.b), where="b")
        c = desc.from_coords(_untuple(self.c), where="c")
        return TateParams(b, c)

    @property
    def degree(self):
        deg = 1
        for _, minpoly in self.generators:
            deg *= len(minpoly) - 1
        return deg


def _untuple(data):
    if isinstance(data, tuple):
        return [_untuple(v) for v in data]
    return data


def _canon_rational(text, location):
    try:
        return format_rational(parse_rational(text))
    except (ValueError, TypeError) as exc:
        raise FixtureError(f"malformed rational {text!r} ({exc})", location) from None


def _canon_array(data, location):
    if isinstance(data, str):
        return _canon_rational(data, location)
    if isinstance(data, list):
        return tuple(_canon_array(v, f"{location}[{i}]") for i, v in enumerate(data))
    raise FixtureError(f"expected rational string or array, got {type(data).__name__}", location)


def _require_int(value, location):
    if isinstance(value, bool) or not isinstance(value, int):
        raise FixtureError(f"expected an integer, got {value!r}", location)
    return value


def parse_fixture(obj, source=None):
    """Canonical Fixture from a parsed record; all errors carry a location."""
    where = lambda field: f"{source}: {field}" if source else field
    if not isinstance(obj, dict):
        raise FixtureError("fixture must be an object", source)
    known = {"label", "N", "generators", "b", "c", "expected_order", "gonality", "note"}
    for key in obj:
        if key not in known:
            raise FixtureError(f"unknown field {key!r}", source)
    for key in ("label", "N", "generators", "b", "c", "expected_order"):
        if key not in obj:
            raise FixtureError(f"missing field {key!r}", source)
    label = obj["label"]
    if not isinstance(label, str) or not label:
        raise FixtureError("label must be a nonempty string", where("label"))
    n = _require_int(obj["N"], where("N"))
    expected = _require_int(obj["expected_order"], where("expected_order"))
    if n < 1 or expected < 1:
        raise FixtureError("orders must be positive", where("N"))
    raw_gens = obj["generators"]
    if not isinstance(raw_gens, list) or not raw_gens:
        raise FixtureError("generators must be a nonempty array", where("generators"))
    generators = []
    seen = set()
    for i, g in enumerate(raw_gens):
        loc = where(f"generators[{i}]")
        if not isinstance(g, dict) or set(g) != {"name", "minpoly"}:
            raise FixtureError("generator needs exactly the fields name, minpoly", loc)
        name = g["name"]
        if not isinstance(name, str) or not name.isidentifier():
            raise FixtureError(f"bad generator name {name!r}", loc)
        if name in seen:
            raise FixtureError(f"duplicate generator name {name!r}", loc)
        seen.add(name)
        if not isinstance(g["minpoly"], list) or len(g["minpoly"]) < 2:
            raise FixtureError("minpoly must list at least two coefficients", f"{loc}.minpoly")
        minpoly = tuple(
            _canon_rational(s, f"{loc}.minpoly[{j}]") for j, s in enumerate(g["minpoly"])
        )
        if parse_rational(minpoly[-1]) != 1:
            raise FixtureError("minpoly must be monic (leading coefficient 1)", f"{loc}.minpoly")
        generators.append((name, minpoly))
    b = _canon_array(obj["b"], where("b"))
    c = _canon_array(obj["c"], where("c"))
    gonality = obj.get("gonality")
    if gonality is not None:
        gonality = _require_int(gonality, where("gonality"))
        if gonality < 1:
            raise FixtureError("gonality must be positive", where("gonality"))
    note = obj.get("note")
    if note is not None and not isinstance(note, str):
        raise FixtureError("note must be a string", where("note"))
    fixture = Fixture(label, n, tuple(generators), b, c, expected, gonality, note)
    try:
        fixture.params()
    except ShapeError as exc:
        raise FixtureError(str(exc), source) from None
    except FieldError as exc:
        raise FixtureError(f"field construction failed: {exc}", source) from None
    return fixture


def load_fixture(path):
    path = Path(path) if isinstance(path, str) else path
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FixtureError(f"cannot read fixture: {exc}", str(path)) from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FixtureError(f"invalid object notation: {exc}", str(path)) from None
    return parse_fixture(obj, source=str(path))


def fixture_record(f):
    """The canonical record form, with stable key order."""
    record = {
        "label": f.label,
        "N": f.n,
        "generators": [
            {"name": name, "minpoly": list(minpoly)} for name, minpoly in f.generators
        ],
        "b": _listify(f.b),
        "c": _listify(f.c),
        "expected_order": f.expected_order,
    }
    if f.gonality is not None:
        record["gonality"] = f.gonality
    if f.note is not None:
        record["note"] = f.note
    return record


def _listify(data):
    if isinstance(data, tuple):
        return [_listify(v) for v in data]
    return data


def serialize_fixture(f):
    return json.dumps(fixture_record(f), indent=2) + "\n"


def save_fixture(f, path):
    Path(path).write_text(serialize_fixture(f), encoding="utf-8")


@dataclass(frozen=True)
class FixtureCheck:
    """Everything verify_fixture learned about one fixture."""

    label: str
    degree: int
    cert_primes: tuple
    disc_nonzero: object
    order_certificate: object
    gonality: object
    below_gonality: object
    passed: bool
    reason: str


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple

    @property
    def pass_count(self):
        return sum(1 for c in self.checks if c.passed)

    @property
    def fail_count(self):
        return len(self.checks) - self.pass_count

    @property
    def all_passed(self):
        return self.fail_count == 0


def verify_fixture(f):
    """Certify one fixture: irreducibility, nonsingularity, exact order.

    Field arithmetic that hits a zero divisor (a reducible minpoly slipping
    past certification) is reported as a failed check, never a crash.
    """
    certs = []
    for name, minpoly in f.generators:
        prime = certify_irreducible_over_q([parse_rational(s) for s in minpoly])
        certs.append((name, prime))
    certs = tuple(certs)
    degree = f.degree
    below = None if f.gonality is None else degree < f.gonality
    try:
        params = f.params()
        e = tate_curve(params)
        disc_nonzero = not e.invariants.disc.is_zero()
        if not disc_nonzero:
            return FixtureCheck(f.label, degree, certs, False, None, f.gonality, below,
                                False, "disc = 0: the curve is singular")
        point = e.point(params.b.descriptor.zero(), params.b.descriptor.zero())
        cert = verify_order(e, point, f.expected_order)
    except FieldError as exc:
        return FixtureCheck(f.label, degree, certs, None, None, f.gonality, below,
                            False, f"field arithmetic failed: {exc}")
    reason = cert.reason if cert.passed else f"order check failed: {cert.reason}"
    return FixtureCheck(f.label, degree, certs, True, cert, f.gonality, below,
                        cert.passed, reason)


def verify_fixtures(fixtures):
    return VerificationReport(tuple(verify_fixture(f) for f in fixtures))


def check_record(check):
    cert = check.order_certificate
    return {
        "label": check.label,
        "degree": check.degree,
        "irreducibility": [
            {"generator": name, "certified_mod": p if p is not None else "not certified"}
            for name, p in check.cert_primes
        ],
        "disc_nonzero": check.disc_nonzero,
        "order": None if cert is None else {
            "target": cert.n,
            "passed": cert.passed,
            "checks": [[k, inf] for k, inf in cert.checks],
            "reason": cert.reason,
        },
        "gonality": check.gonality,
        "below_gonality": check.below_gonality,
        "passed": check.passed,
        "reason": check.reason,
    }


def report_record(report):
    return {
        "fixtures": [check_record(c) for c in report.checks],
        "pass_count": report.pass_count,
        "fail_count": report.fail_count,
        "all_passed": report.all_passed,
    }


def shipped_fixture_paths():
    """The fixture files installed with the package, sorted by file name."""
    root = resources.files("x1torsion").joinpath("data")
    return sorted((p for p in root.iterdir() if p.name.endswith(".json")),
                  key=lambda p: p.name)
