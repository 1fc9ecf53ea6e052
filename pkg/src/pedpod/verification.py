"""Numeric checks of the six identities and exhaustive audits of the maps.

The six identities, each with the smallest n from which it holds:

    T1  d1(n)   + d1(n-1)  = ped(n)       n >= 1
    T2  d2(n)   + d2(n-3)  = ped_gt1(n)   n >= 1
    T3  d3(n+2) + d3(n-1)  = ped(n)       n >= 1
    T4  o1(n)   + o1(n-1)  = pod(n)       n >= 2
    T5  o2(n)   + o2(n-3)  = pod_gt2(n)   n >= 5
    T6  o3(n+2) + o3(n-1)  = pod(n)       n >= 3

Counts at negative arguments are 0, so every row is well defined; rows
below the threshold are evaluated and reported but marked informational
and never fail a report.  (T5 genuinely breaks at n=3, where the right
side counts the partition (3) and the left side counts nothing.)

Audits enumerate a map's declared domain and codomain outright and check
totality, the declared weight shift, landing inside the codomain,
injectivity, surjectivity, and both round trips.  The audit weight n is
the identity's n: the codomain sits at weight n and the domain at
n - weight_shift.  Tagged decompositions are audited by comparing each
bucket against the full member listing of its class, which is exactly the
counting argument the identities rest on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bijections import (
    Bijection,
    BijectionId,
    DomainError,
    TaggedPreimage,
    TotalDecomposition,
    get_bijection,
)
from .core import Partition, PartitionClass, is_member
from .counting import count_table
from .enumeration import all_partitions

_AUDIT_WEIGHT_CAP = 40
_FAILURE_CAP = 100


# ---------------------------------------------------------------------------
# Identity registry


@dataclass(frozen=True)
class IdentitySpec:
    """One two-term counting identity with its validity threshold."""

    identity_id: str
    lhs: tuple[tuple[PartitionClass, int], ...]
    rhs: tuple[PartitionClass, int]
    threshold: int
    bijection_ids: tuple[BijectionId, ...]

    def term_labels(self) -> list[str]:
        return [_term_label(cls, off) for cls, off in self.lhs]

    def describe(self) -> str:
        lhs = " + ".join(self.term_labels())
        rhs = _term_label(*self.rhs)
        return f"{lhs} = {rhs} for n >= {self.threshold}"


def _term_label(partition_class: PartitionClass, offset: int) -> str:
    inner = "n" if offset == 0 else f"n{offset:+d}"
    return f"{partition_class.value}({inner})"


IDENTITIES: dict[str, IdentitySpec] = {
    "T1": IdentitySpec(
        "T1",
        ((PartitionClass.D1, 0), (PartitionClass.D1, -1)),
        (PartitionClass.PED, 0),
        1,
        (BijectionId.B1,),
    ),
    "T2": IdentitySpec(
        "T2",
        ((PartitionClass.D2, 0), (PartitionClass.D2, -3)),
        (PartitionClass.PED_GT1, 0),
        1,
        (
            BijectionId.B2_SHIFT,
            BijectionId.B2_EXCHANGE_CA,
            BijectionId.B2_EXCHANGE_DB,
            BijectionId.B2_EXCEPTIONAL,
            BijectionId.B2_TOTAL,
        ),
    ),
    "T3": IdentitySpec(
        "T3",
        ((PartitionClass.D3, 2), (PartitionClass.D3, -1)),
        (PartitionClass.PED, 0),
        1,
        (BijectionId.B3_ADD, BijectionId.B3_SUB),
    ),
    "T4": IdentitySpec(
        "T4",
        ((PartitionClass.O1, 0), (PartitionClass.O1, -1)),
        (PartitionClass.POD, 0),
        2,
        (BijectionId.B4,),
    ),
    "T5": IdentitySpec(
        "T5",
        ((PartitionClass.O2, 0), (PartitionClass.O2, -3)),
        (PartitionClass.POD_GT2, 0),
        5,
        (BijectionId.B5_SHIFT, BijectionId.B5_EXCHANGE, BijectionId.B5_TOTAL),
    ),
    "T6": IdentitySpec(
        "T6",
        ((PartitionClass.O3, 2), (PartitionClass.O3, -1)),
        (PartitionClass.POD, 0),
        3,
        (BijectionId.B6_ADD, BijectionId.B6_SUB),
    ),
}


def get_identity(key: "str | IdentitySpec") -> IdentitySpec:
    if isinstance(key, IdentitySpec):
        return key
    try:
        return IDENTITIES[key.strip().upper()]
    except KeyError:
        known = ", ".join(IDENTITIES)
        raise ValueError(f"unknown identity {key!r} (known: {known})") from None


def identity_ids() -> list[str]:
    return list(IDENTITIES)


# ---------------------------------------------------------------------------
# Identity verification


@dataclass(frozen=True)
class IdentityRow:
    n: int
    lhs_values: tuple[int, ...]
    lhs_total: int
    rhs_value: int
    equal: bool
    checked: bool  # False below the threshold: informational only

    def status(self) -> str:
        if self.checked:
            return "pass" if self.equal else "FAIL"
        return "info-pass" if self.equal else "info-fail"


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    description: str
    term_labels: tuple[str, ...]
    n_lo: int
    n_hi: int
    threshold: int
    backend: str
    rows: tuple[IdentityRow, ...]
    overall_pass: bool

    def to_obj(self) -> dict:
        return {
            "identity": self.identity_id,
            "description": self.description,
            "n_lo": self.n_lo,
            "n_hi": self.n_hi,
            "threshold": self.threshold,
            "backend": self.backend,
            "overall_pass": self.overall_pass,
            "rows": [
                {
                    "n": r.n,
                    "lhs_values": list(r.lhs_values),
                    "lhs_total": r.lhs_total,
                    "rhs_value": r.rhs_value,
                    "equal": r.equal,
                    "checked": r.checked,
                }
                for r in self.rows
            ],
        }

    def to_csv(self) -> str:
        head = ["n", *self.term_labels, "lhs", "rhs", "status"]
        lines = [",".join(head)]
        for r in self.rows:
            cells = [str(r.n), *(str(v) for v in r.lhs_values)]
            cells += [str(r.lhs_total), str(r.rhs_value), r.status()]
            lines.append(",".join(cells))
        return "\n".join(lines)

    def to_table(self) -> str:
        verdict = "PASS" if self.overall_pass else "FAIL"
        head = ["n", *self.term_labels, "lhs", "rhs", "status"]
        body = []
        for r in self.rows:
            body.append(
                [str(r.n), *(str(v) for v in r.lhs_values), str(r.lhs_total), str(r.rhs_value), r.status()]
            )
        widths = [max(len(row[i]) for row in [head, *body]) for i in range(len(head))]
        lines = [
            f"identity {self.identity_id}: {self.description}  "
            f"[backend={self.backend}, n={self.n_lo}..{self.n_hi}]  {verdict}"
        ]
        lines.append("  ".join(h.rjust(w) for h, w in zip(head, widths)))
        for row in body:
            lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
        return "\n".join(lines)


def verify_identity(
    identity: "str | IdentitySpec",
    n_lo: int = 0,
    n_hi: int = 30,
    backend: str = "dp",
) -> IdentityReport:
    """Compare both sides of an identity for every n in [n_lo, n_hi]."""
    spec = get_identity(identity)
    if n_lo < 0 or n_hi < n_lo:
        raise ValueError("need 0 <= n_lo <= n_hi")
    top = n_hi + max((off for _, off in (*spec.lhs, spec.rhs)), default=0)
    top = max(top, n_hi)
    tables = {}
    for cls, _ in (*spec.lhs, spec.rhs):
        if cls not in tables:
            tables[cls] = count_table(cls, top, backend).counts

    def term(cls: PartitionClass, n: int, off: int) -> int:
        idx = n + off
        return tables[cls][idx] if idx >= 0 else 0

    rows = []
    for n in range(n_lo, n_hi + 1):
        lhs_values = tuple(term(cls, n, off) for cls, off in spec.lhs)
        rhs_value = term(spec.rhs[0], n, spec.rhs[1])
        lhs_total = sum(lhs_values)
        rows.append(
            IdentityRow(n, lhs_values, lhs_total, rhs_value, lhs_total == rhs_value, n >= spec.threshold)
        )
    overall = all(r.equal for r in rows if r.checked)
    return IdentityReport(
        spec.identity_id,
        spec.describe(),
        tuple(spec.term_labels()),
        n_lo,
        n_hi,
        spec.threshold,
        backend,
        tuple(rows),
        overall,
    )


# ---------------------------------------------------------------------------
# Bijection audits


@dataclass(frozen=True)
class AuditRecord:
    n: int
    domain_size: int
    codomain_size: int
    passed: bool
    failures: tuple[str, ...]


@dataclass(frozen=True)
class AuditReport:
    subject: str
    kind: str  # "bijection" or "total"
    n_lo: int
    n_hi: int
    records: tuple[AuditRecord, ...]
    overall_pass: bool
    reconstructed: bool
    backend: str = "enum"

    def to_obj(self) -> dict:
        return {
            "subject": self.subject,
            "kind": self.kind,
            "n_lo": self.n_lo,
            "n_hi": self.n_hi,
            "backend": self.backend,
            "reconstructed": self.reconstructed,
            "overall_pass": self.overall_pass,
            "records": [
                {
                    "n": r.n,
                    "domain_size": r.domain_size,
                    "codomain_size": r.codomain_size,
                    "passed": r.passed,
                    "failures": list(r.failures),
                }
                for r in self.records
            ],
        }

    def to_csv(self) -> str:
        lines = ["n,domain_size,codomain_size,passed"]
        for r in self.records:
            lines.append(f"{r.n},{r.domain_size},{r.codomain_size},{str(r.passed).lower()}")
        return "\n".join(lines)

    def to_table(self) -> str:
        verdict = "PASS" if self.overall_pass else "FAIL"
        flag = "  [reconstructed]" if self.reconstructed else ""
        lines = [f"audit {self.subject} ({self.kind}) n={self.n_lo}..{self.n_hi}  {verdict}{flag}"]
        for r in self.records:
            mark = "ok" if r.passed else "FAIL"
            lines.append(f"  n={r.n:<3d} domain={r.domain_size:<6d} codomain={r.codomain_size:<6d} {mark}")
            for f in r.failures:
                lines.append(f"    ! {f}")
        return "\n".join(lines)


def _audit_plain(b: Bijection, n: int) -> AuditRecord:
    failures: list[str] = []
    domain = [p for p in all_partitions(n - b.weight_shift) if b.in_domain(p)]
    codomain = [q for q in all_partitions(n) if b.in_codomain(q)]
    image: dict[Partition, Partition] = {}
    for p in domain:
        try:
            q = b.forward(p)
        except DomainError as exc:
            failures.append(f"forward undefined on {p}: {exc}")
            continue
        if q.weight != p.weight + b.weight_shift:
            failures.append(f"{p} -> {q} shifts weight by {q.weight - p.weight}, not {b.weight_shift}")
        if not b.in_codomain(q):
            failures.append(f"{p} -> {q} lands outside the codomain")
        if q in image:
            failures.append(f"{image[q]} and {p} collide on {q}")
        else:
            image[q] = p
        try:
            back = b.inverse(q)
        except DomainError as exc:
            failures.append(f"inverse undefined on {q}: {exc}")
            continue
        if back != p:
            failures.append(f"round trip failed: {p} -> {q} -> {back}")
    for q in codomain:
        if q not in image:
            failures.append(f"{q} is in the codomain but has no preimage")
            continue
        try:
            p = b.inverse(q)
        except DomainError as exc:
            failures.append(f"inverse undefined on codomain member {q}: {exc}")
            continue
        if not b.in_domain(p):
            failures.append(f"inverse sends {q} to {p}, outside the domain")
    return AuditRecord(n, len(domain), len(codomain), not failures, tuple(failures))


def _audit_total(t: TotalDecomposition, n: int) -> AuditRecord:
    if n < t.min_weight:
        # Below the gate the decomposition is undefined; nothing to check.
        return AuditRecord(n, 0, 0, True, ())
    failures: list[str] = []
    domain = [p for p in all_partitions(n) if is_member(p, t.domain_class)]
    expected = {
        off: set(p for p in all_partitions(n + off) if is_member(p, t.bucket_class))
        for off in t.offsets
    }
    buckets: dict[int, dict[Partition, Partition]] = {off: {} for off in t.offsets}
    for p in domain:
        try:
            tagged = t.forward(p)
        except DomainError as exc:
            failures.append(f"forward undefined on {p}: {exc}")
            continue
        if tagged.offset not in buckets:
            failures.append(f"{p} got unknown bucket offset {tagged.offset}")
            continue
        q = tagged.partition
        if q.weight != n + tagged.offset:
            failures.append(f"{p} -> {q} has weight {q.weight}, bucket expects {n + tagged.offset}")
        if not is_member(q, t.bucket_class):
            failures.append(f"{p} -> {q} is not a {t.bucket_class.value} member")
        if q in buckets[tagged.offset]:
            failures.append(f"{buckets[tagged.offset][q]} and {p} collide on {q} in bucket {tagged.tag_text()}")
        else:
            buckets[tagged.offset][q] = p
        try:
            back = t.inverse(tagged)
        except DomainError as exc:
            failures.append(f"inverse undefined on {q} @ {tagged.tag_text()}: {exc}")
            continue
        if back != p:
            failures.append(f"round trip failed: {p} -> {q} @ {tagged.tag_text()} -> {back}")
    for off in t.offsets:
        produced = set(buckets[off])
        for q in sorted(expected[off] - produced, reverse=True):
            failures.append(f"bucket n{off:+d}: {q} never produced")
        for q in sorted(produced - expected[off], reverse=True):
            failures.append(f"bucket n{off:+d}: {q} produced but not expected")
    for off in t.offsets:
        for q in sorted(expected[off], reverse=True):
            try:
                p = t.inverse(TaggedPreimage(off, q))
            except DomainError as exc:
                failures.append(f"inverse undefined on bucket member {q} @ n{off:+d}: {exc}")
                continue
            if p.weight != n or not is_member(p, t.domain_class):
                failures.append(f"inverse sends {q} @ n{off:+d} to {p}, outside {t.domain_class.value}({n})")
    codomain_size = sum(len(expected[off]) for off in t.offsets)
    return AuditRecord(n, len(domain), codomain_size, not failures, tuple(failures))


def _audit_one(mapping: "Bijection | TotalDecomposition", n: int) -> AuditRecord:
    if isinstance(mapping, TotalDecomposition):
        return _audit_total(mapping, n)
    return _audit_plain(mapping, n)


def _cap_failures(records: list[AuditRecord]) -> list[AuditRecord]:
    budget = _FAILURE_CAP
    capped = []
    for rec in records:
        if len(rec.failures) <= budget:
            budget -= len(rec.failures)
            capped.append(rec)
            continue
        kept = rec.failures[:budget] + (f"... {len(rec.failures) - budget} more suppressed",)
        budget = 0
        capped.append(AuditRecord(rec.n, rec.domain_size, rec.codomain_size, rec.passed, kept))
    return capped


def audit_bijection(key: "BijectionId | str", n: int) -> AuditReport:
    """Exhaustively audit one map at a single identity weight n."""
    return audit_bijection_range(key, n, n)


def audit_bijection_range(key: "BijectionId | str", n_lo: int, n_hi: int) -> AuditReport:
    """Exhaustively audit one map for every identity weight in [n_lo, n_hi]."""
    mapping = get_bijection(key)
    if n_lo < 0 or n_hi < n_lo:
        raise ValueError("need 0 <= n_lo <= n_hi")
    if n_hi > _AUDIT_WEIGHT_CAP:
        raise ValueError(f"audits enumerate partitions exhaustively; n_hi is capped at {_AUDIT_WEIGHT_CAP}")
    records = _cap_failures([_audit_one(mapping, n) for n in range(n_lo, n_hi + 1)])
    kind = "total" if isinstance(mapping, TotalDecomposition) else "bijection"
    return AuditReport(
        mapping.name,
        kind,
        n_lo,
        n_hi,
        tuple(records),
        all(r.passed for r in records),
        mapping.reconstructed,
    )


# ---------------------------------------------------------------------------
# Backend cross-checks


@dataclass(frozen=True)
class CrossCheckRecord:
    name: str
    n_hi: int
    passed: bool
    mismatches: tuple[str, ...]


@dataclass(frozen=True)
class CrossCheckReport:
    n_max: int
    records: tuple[CrossCheckRecord, ...]
    overall_pass: bool

    def to_obj(self) -> dict:
        return {
            "n_max": self.n_max,
            "overall_pass": self.overall_pass,
            "records": [
                {
                    "name": r.name,
                    "n_hi": r.n_hi,
                    "passed": r.passed,
                    "mismatches": list(r.mismatches),
                }
                for r in self.records
            ],
        }

    def to_csv(self) -> str:
        lines = ["check,n_hi,passed"]
        for r in self.records:
            lines.append(f"{r.name},{r.n_hi},{str(r.passed).lower()}")
        return "\n".join(lines)

    def to_table(self) -> str:
        verdict = "PASS" if self.overall_pass else "FAIL"
        width = max(len(r.name) for r in self.records)
        lines = [f"crosscheck n_max={self.n_max}  {verdict}"]
        for r in self.records:
            mark = "ok" if r.passed else "FAIL"
            lines.append(f"  {r.name.ljust(width)}  n<={r.n_hi:<4d} {mark}")
            for m in r.mismatches:
                lines.append(f"    ! {m}")
        return "\n".join(lines)


_SERIES_CLASSES = (
    PartitionClass.PED,
    PartitionClass.PED_GT1,
    PartitionClass.POD,
    PartitionClass.POD_GT2,
    PartitionClass.FOUR_REGULAR,
)

_ENUM_CHECK_CAP = 35


def cross_check_counts(n_max: int) -> CrossCheckReport:
    """Check ENUM=DP, DP=SERIES, and ped=four_regular over 0..n_max."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    records = []
    enum_top = min(n_max, _ENUM_CHECK_CAP)
    for cls in PartitionClass:
        a = count_table(cls, enum_top, "enum").counts
        b = count_table(cls, enum_top, "dp").counts
        bad = tuple(
            f"n={n}: enum={a[n]} dp={b[n]}" for n in range(enum_top + 1) if a[n] != b[n]
        )[:20]
        records.append(CrossCheckRecord(f"enum_vs_dp:{cls.value}", enum_top, not bad, bad))
    for cls in _SERIES_CLASSES:
        a = count_table(cls, n_max, "dp").counts
        b = count_table(cls, n_max, "series").counts
        bad = tuple(
            f"n={n}: dp={a[n]} series={b[n]}" for n in range(n_max + 1) if a[n] != b[n]
        )[:20]
        records.append(CrossCheckRecord(f"dp_vs_series:{cls.value}", n_max, not bad, bad))
    ped = count_table(PartitionClass.PED, n_max, "dp").counts
    four = count_table(PartitionClass.FOUR_REGULAR, n_max, "dp").counts
    bad = tuple(
        f"n={n}: ped={ped[n]} four_regular={four[n]}" for n in range(n_max + 1) if ped[n] != four[n]
    )[:20]
    records.append(CrossCheckRecord("ped_equals_four_regular", n_max, not bad, bad))
    return CrossCheckReport(n_max, tuple(records), all(r.passed for r in records))
