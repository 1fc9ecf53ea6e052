"""The fourteen proof maps behind the six identities, forward and inverse.

Every map is a weight-shifting bijection between two explicitly described
sets of partitions.  Fourteen maps are registered under stable dotted names:

    thm1.add            D1(n-1)            -> PED(n), largest part even     (+1)
    thm2.shift          D2(n-3)            -> PED(n) of shape (L, L-1, ...) (+3)
    thm2.exchange.CA    set C minus C'     -> set A minus A'                ( 0)
    thm2.exchange.DB    set D minus D'     -> set B minus B'                ( 0)
    thm2.exceptional    C' union D'        -> A' union B'                   ( 0)
    thm2.total          PED_GT1(n)         -> D2(n) or D2(n-3), tagged
    thm3.add            D3(n-1)            -> PED(n), even largest, gap 2   (+1)
    thm3.sub            D3(n+2)            -> the rest of PED(n)            (-2)
    thm4.add            O1(n-1)            -> POD(n), largest part odd      (+1)
    thm5.shift          O2(n-3)            -> POD(n) of shape (L, L-1, ...) (+3)
    thm5.exchange       set C union D      -> set A union B                 ( 0)
    thm5.total          POD_GT2(n)         -> O2(n) or O2(n-3), tagged
    thm6.add            O3(n-1)            -> POD(n), odd largest, gap 2    (+1)
    thm6.sub            O3(n+2)            -> the rest of POD(n)            (-2)

The thm2 letter sets live inside PED(n): C has an even largest part and no
part 1, D has an odd largest part with a gap of at least 2 below it and no
part 1, A is the D2 members containing a 1, and B has shape (L, L-1, ...)
with a 1.  The primed sets are the finitely many special shapes the
exceptional map trades between.  The thm5 letter sets are the analogues
inside POD(n) with the roles of the parities swapped and with parts 1 and 2
acting as the small parts: C and D require every part to be at least 3,
while A and B require a part 1 or 2.

thm4.add, thm6.add, and thm6.sub are reconstructions by parity symmetry
with thm1/thm3; they carry a `reconstructed` flag that audit reports
propagate.  Exchange-map images absorb any leftover weight as filler parts
of size 2; the filler count is half the weight deficit and an assertion
enforces that the deficit is even and non-negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .core import Partition, PartitionClass, is_member


class DomainError(ValueError):
    """Raised when a map is applied outside its declared domain."""


class BijectionId(Enum):
    """Stable dotted names for the fourteen maps."""

    B1 = "thm1.add"
    B2_SHIFT = "thm2.shift"
    B2_EXCHANGE_CA = "thm2.exchange.CA"
    B2_EXCHANGE_DB = "thm2.exchange.DB"
    B2_EXCEPTIONAL = "thm2.exceptional"
    B2_TOTAL = "thm2.total"
    B3_ADD = "thm3.add"
    B3_SUB = "thm3.sub"
    B4 = "thm4.add"
    B5_SHIFT = "thm5.shift"
    B5_EXCHANGE = "thm5.exchange"
    B5_TOTAL = "thm5.total"
    B6_ADD = "thm6.add"
    B6_SUB = "thm6.sub"

    @classmethod
    def from_name(cls, name: str) -> "BijectionId":
        for member in cls:
            if member.value == name:
                return member
        known = ", ".join(m.value for m in cls)
        raise ValueError(f"unknown bijection {name!r} (known: {known})")


@dataclass(frozen=True)
class TaggedPreimage:
    """A partition plus the summand bucket it belongs to.

    offset 0 means the bucket at the identity's own weight n; offset -3
    means the bucket at weight n-3.
    """

    offset: int
    partition: Partition

    def tag_text(self) -> str:
        return "n" if self.offset == 0 else f"n{self.offset}"


def _exact(parts: tuple[int, ...]) -> Partition:
    """Build a partition from parts that must already be non-increasing.

    Used for every pattern-assembled image: if this assertion fires, a case
    table produced parts out of order, which would mean the map recipe and
    not just the bookkeeping is wrong.
    """
    assert all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)), parts
    assert not parts or parts[-1] >= 1, parts
    return Partition._unsafe(parts)


def _ones(count: int) -> Partition:
    return Partition._unsafe((1,) * count)


def _require(condition: bool, p: Partition, why: str) -> None:
    if not condition:
        raise DomainError(f"{p.to_text()} is outside the domain: {why}")


# ---------------------------------------------------------------------------
# thm1.add: D1(n-1) -> PED(n) with even largest part


def b1_forward(p: Partition) -> Partition:
    _require(is_member(p, PartitionClass.D1), p, "expected a D1 member")
    return _exact((p[0] + 1,) + tuple(p[1:]))


def b1_inverse(q: Partition) -> Partition:
    _require(_b1_in_codomain(q), q, "expected a PED member with even largest part")
    return _exact((q[0] - 1,) + tuple(q[1:]))


def _b1_in_codomain(q: Partition) -> bool:
    return bool(q) and q[0] % 2 == 0 and is_member(q, PartitionClass.PED)


# ---------------------------------------------------------------------------
# thm2.shift: D2(n-3) -> PED(n) of shape (L, L-1, ...), adding 2 and 1 to
# the two leading parts.  The inverse subtracts them again.


def _shift_up(p: Partition) -> Partition:
    return _exact((p[0] + 2, p[0] + 1) + tuple(p[2:]))


def _shift_down(q: Partition) -> Partition:
    return _exact((q[0] - 2, q[0] - 2) + tuple(q[2:]))


def b2_shift_forward(p: Partition) -> Partition:
    _require(is_member(p, PartitionClass.D2), p, "expected a D2 member")
    return _shift_up(p)


def b2_shift_inverse(q: Partition) -> Partition:
    _require(_b2_shift_in_codomain(q), q, "expected PED of shape (L, L-1, ...) with L odd")
    return _shift_down(q)


def _b2_shift_in_codomain(q: Partition) -> bool:
    return (
        len(q) > 1
        and q[0] % 2 == 1
        and q[1] == q[0] - 1
        and is_member(q, PartitionClass.PED)
    )


# ---------------------------------------------------------------------------
# The thm2 letter sets.  All live inside PED(n).


def in_set_c2(p: Partition) -> bool:
    """C: even largest part and no part 1."""
    return bool(p) and p[0] % 2 == 0 and p[-1] != 1 and is_member(p, PartitionClass.PED)


def in_set_d2(p: Partition) -> bool:
    """D: odd largest part, next part at least 2 below it (or absent), no part 1."""
    return (
        bool(p)
        and p[0] % 2 == 1
        and p[-1] != 1
        and (len(p) == 1 or p[1] <= p[0] - 2)
        and is_member(p, PartitionClass.PED)
    )


def in_set_a2(p: Partition) -> bool:
    """A: D2 member containing a part 1."""
    return bool(p) and p[-1] == 1 and is_member(p, PartitionClass.D2)


def in_set_b2(p: Partition) -> bool:
    """B: shape (L, L-1, ...) with L odd, containing a part 1."""
    return (
        len(p) > 1
        and p[0] % 2 == 1
        and p[1] == p[0] - 1
        and p[-1] == 1
        and is_member(p, PartitionClass.PED)
    )


def in_set_c2_prime(p: Partition) -> bool:
    """C': the singleton (n) and the pair (n-2, 2)."""
    return in_set_c2(p) and (len(p) == 1 or (len(p) == 2 and p[1] == 2))


def in_set_d2_prime(p: Partition) -> bool:
    """D': the singleton (n) and the shapes with the second part exactly L-2."""
    return in_set_d2(p) and (len(p) == 1 or p[1] == p[0] - 2)


def in_set_a2_prime(p: Partition) -> bool:
    """A': the all-ones partition and the A members with exactly two 1s."""
    if not in_set_a2(p):
        return False
    ones = p.multiplicity(1)
    return ones == len(p) or ones == 2


def in_set_b2_prime(p: Partition) -> bool:
    """B': the shapes (3, 2, 1, ..., 1) of even weight."""
    return in_set_b2(p) and p[0] == 3 and p.weight % 2 == 0


# thm2.exchange.CA: trade an even largest part 2l for a doubled second part
# plus filler 1s.  C minus C' onto A minus A'.


def b2_exchange_ca_forward(p: Partition) -> Partition:
    _require(in_set_c2(p) and not in_set_c2_prime(p), p, "expected a member of C minus C'")
    largest, second, tail = p[0], p[1], tuple(p[2:])
    if second % 2 == 1:
        return _exact((second, second) + tail + (1,) * (largest - second))
    return _exact((second - 1, second - 1) + tail + (1,) * (largest - second + 2))


def b2_exchange_ca_inverse(q: Partition) -> Partition:
    _require(in_set_a2(q) and not in_set_a2_prime(q), q, "expected a member of A minus A'")
    ones = q.multiplicity(1)
    body = tuple(q[: len(q) - ones])
    a = q[0]
    if ones % 2 == 1:
        return _exact((a + ones,) + body[1:])
    return _exact((a + ones - 1, a + 1) + body[2:])


# thm2.exchange.DB: push the odd largest part 2l+1 down onto the second
# part, again absorbing the difference as filler 1s.  D minus D' onto B
# minus B'.


def b2_exchange_db_forward(p: Partition) -> Partition:
    _require(in_set_d2(p) and not in_set_d2_prime(p), p, "expected a member of D minus D'")
    largest, second, tail = p[0], p[1], tuple(p[2:])
    if second % 2 == 1:
        return _exact((second + 2, second + 1) + tail + (1,) * (largest - second - 3))
    return _exact((second + 1, second) + tail + (1,) * (largest - second - 1))


def b2_exchange_db_inverse(q: Partition) -> Partition:
    _require(in_set_b2(q) and not in_set_b2_prime(q), q, "expected a member of B minus B'")
    ones = q.multiplicity(1)
    body = tuple(q[: len(q) - ones])
    a = q[0]
    if ones % 2 == 1:
        return _exact((a + ones + 1, a - 2) + body[2:])
    return _exact((a + ones, a - 1) + body[2:])


# thm2.exceptional: the finite trade between the primed sets.


def b2_exceptional_forward(p: Partition) -> Partition:
    _require(
        in_set_c2_prime(p) or in_set_d2_prime(p), p, "expected a member of C' union D'"
    )
    n = p.weight
    if len(p) == 1:
        return _ones(n)
    if p[0] % 2 == 0:  # (n-2, 2)
        return _exact((3, 2) + (1,) * (n - 5))
    # (L, L-2, tail) with L odd
    return _exact((p[0] - 2, p[0] - 2) + tuple(p[2:]) + (1, 1))


def b2_exceptional_inverse(q: Partition) -> Partition:
    _require(
        in_set_a2_prime(q) or in_set_b2_prime(q), q, "expected a member of A' union B'"
    )
    n = q.weight
    if q[0] == 1:
        return _exact((n,))
    if q[0] == 3 and q[1] == 2:
        return _exact((n - 2, 2))
    # (a, a, tail, 1, 1): drop the two 1s and raise one copy of a by 2
    return _exact((q[0] + 2,) + tuple(q[1:-2]))


def thm2_sets(n: int) -> dict[str, tuple[Partition, ...]]:
    """Materialize the eight thm2 letter sets at weight n."""
    from .enumeration import all_partitions

    tests = {
        "C": in_set_c2,
        "D": in_set_d2,
        "A": in_set_a2,
        "B": in_set_b2,
        "C'": in_set_c2_prime,
        "D'": in_set_d2_prime,
        "A'": in_set_a2_prime,
        "B'": in_set_b2_prime,
    }
    pool = all_partitions(n)
    return {name: tuple(p for p in pool if test(p)) for name, test in tests.items()}


# thm2.total: the assembled decomposition PED_GT1(n) -> D2(n) union D2(n-3).


def b2_total_forward(p: Partition) -> TaggedPreimage:
    _require(is_member(p, PartitionClass.PED_GT1), p, "expected a PED_GT1 member")
    largest = p[0]
    if largest % 2 == 1:
        if len(p) > 1 and p[1] == largest:
            return TaggedPreimage(0, p)  # already a D2 member without 1s
        if len(p) > 1 and p[1] == largest - 1:
            return TaggedPreimage(-3, _shift_down(p))
        if len(p) == 1 or p[1] == largest - 2:
            return TaggedPreimage(0, b2_exceptional_forward(p))
        return TaggedPreimage(-3, _shift_down(b2_exchange_db_forward(p)))
    if len(p) == 1:
        return TaggedPreimage(0, b2_exceptional_forward(p))
    if len(p) == 2 and p[1] == 2:
        return TaggedPreimage(-3, _shift_down(b2_exceptional_forward(p)))
    return TaggedPreimage(0, b2_exchange_ca_forward(p))


def b2_total_inverse(tagged: TaggedPreimage) -> Partition:
    q = tagged.partition
    _require(is_member(q, PartitionClass.D2), q, "expected a D2 member")
    if tagged.offset == 0:
        if q[-1] != 1:
            return q
        if in_set_a2_prime(q):
            return b2_exceptional_inverse(q)
        return b2_exchange_ca_inverse(q)
    if tagged.offset == -3:
        lifted = _shift_up(q)
        if lifted[-1] != 1:
            return lifted
        if in_set_b2_prime(lifted):
            return b2_exceptional_inverse(lifted)
        return b2_exchange_db_inverse(lifted)
    raise DomainError(f"unknown bucket offset {tagged.offset!r} (expected 0 or -3)")


# ---------------------------------------------------------------------------
# thm3.add / thm3.sub: D3(n-1) and D3(n+2) cover PED(n) between them.


def b3_add_forward(p: Partition) -> Partition:
    _require(is_member(p, PartitionClass.D3), p, "expected a D3 member")
    return _exact((p[0] + 1,) + tuple(p[1:]))


def b3_add_inverse(q: Partition) -> Partition:
    _require(_b3_add_in_codomain(q), q, "expected PED, even largest part, gap of 2 below")
    return _exact((q[0] - 1,) + tuple(q[1:]))


def _b3_add_in_codomain(q: Partition) -> bool:
    return (
        bool(q)
        and q[0] % 2 == 0
        and (len(q) == 1 or q[1] <= q[0] - 2)
        and is_member(q, PartitionClass.PED)
    )


def b3_sub_forward(p: Partition) -> Partition:
    _require(
        is_member(p, PartitionClass.D3) and p.weight >= 3,
        p,
        "expected a D3 member of weight at least 3",
    )
    return Partition((p[0] - 2,) + tuple(p[1:]))  # may need re-sorting


def b3_sub_inverse(q: Partition) -> Partition:
    _require(_b3_sub_in_codomain(q), q, "expected PED with odd largest part or shape (L, L-1, ...)")
    if q[0] % 2 == 1:
        return _exact((q[0] + 2,) + tuple(q[1:]))
    # even largest, second exactly one below: raise that second part
    return _exact((q[0] + 1, q[0]) + tuple(q[2:]))


def _b3_sub_in_codomain(q: Partition) -> bool:
    if not q or not is_member(q, PartitionClass.PED):
        return False
    return q[0] % 2 == 1 or (len(q) > 1 and q[1] == q[0] - 1)


# ---------------------------------------------------------------------------
# thm4.add: reconstruction of the O1(n-1) -> POD(n) analogue of thm1.add.


def b4_forward(p: Partition) -> Partition:
    _require(is_member(p, PartitionClass.O1), p, "expected an O1 member")
    return _exact((p[0] + 1,) + tuple(p[1:]))


def b4_inverse(q: Partition) -> Partition:
    _require(_b4_in_codomain(q), q, "expected POD of weight >= 2 with odd largest part")
    return _exact((q[0] - 1,) + tuple(q[1:]))


def _b4_in_codomain(q: Partition) -> bool:
    return bool(q) and q[0] % 2 == 1 and q.weight >= 2 and is_member(q, PartitionClass.POD)


# ---------------------------------------------------------------------------
# thm5.shift: O2(n-3) -> POD(n) of shape (L, L-1, ...), as for thm2.shift.


def b5_shift_forward(p: Partition) -> Partition:
    _require(is_member(p, PartitionClass.O2), p, "expected an O2 member")
    return _shift_up(p)


def b5_shift_inverse(q: Partition) -> Partition:
    _require(
        _b5_shift_in_codomain(q), q, "expected POD of shape (L, L-1, ...), L even, weight >= 5"
    )
    return _shift_down(q)


def _b5_shift_in_codomain(q: Partition) -> bool:
    return (
        len(q) > 1
        and q[0] % 2 == 0
        and q[1] == q[0] - 1
        and q.weight >= 5
        and is_member(q, PartitionClass.POD)
    )


# ---------------------------------------------------------------------------
# The thm5 letter sets.  All live inside POD(n).


def in_set_c5(p: Partition) -> bool:
    """C: odd largest part and every part at least 3."""
    return bool(p) and p[0] % 2 == 1 and p[-1] >= 3 and is_member(p, PartitionClass.POD)


def in_set_d5(p: Partition) -> bool:
    """D: even largest, next part at least 2 below (or absent), every part >= 3."""
    return (
        bool(p)
        and p[0] % 2 == 0
        and p[-1] >= 3
        and (len(p) == 1 or p[1] <= p[0] - 2)
        and is_member(p, PartitionClass.POD)
    )


def in_set_a5(p: Partition) -> bool:
    """A: O2 member whose smallest part is 1 or 2."""
    return bool(p) and p[-1] <= 2 and is_member(p, PartitionClass.O2)


def in_set_b5(p: Partition) -> bool:
    """B: shape (L, L-1, ...) with L even, smallest part 1 or 2."""
    return (
        len(p) > 1
        and p[0] % 2 == 0
        and p[1] == p[0] - 1
        and p[-1] <= 2
        and is_member(p, PartitionClass.POD)
    )


def thm5_sets(n: int) -> dict[str, tuple[Partition, ...]]:
    """Materialize the four thm5 letter sets at weight n."""
    from .enumeration import all_partitions

    tests = {"C": in_set_c5, "D": in_set_d5, "A": in_set_a5, "B": in_set_b5}
    pool = all_partitions(n)
    return {name: tuple(p for p in pool if test(p)) for name, test in tests.items()}


# thm5.exchange: C union D -> A union B.  Every image carries the tail
# verbatim and absorbs the weight difference as filler 2s; four of the six
# branches also append a single 1.


def _pad_with_twos(head: tuple[int, ...], total: int, append_one: bool) -> Partition:
    spoken_for = sum(head) + (1 if append_one else 0)
    deficit = total - spoken_for
    assert deficit >= 0 and deficit % 2 == 0, (head, total, append_one)
    parts = head + (2,) * (deficit // 2) + ((1,) if append_one else ())
    return _exact(parts)


def b5_exchange_forward(p: Partition) -> Partition:
    _require(in_set_c5(p) or in_set_d5(p), p, "expected a member of C union D")
    n = p.weight
    largest = p[0]
    second = p[1] if len(p) > 1 else 0
    tail = tuple(p[2:])
    if largest % 2 == 1:
        if second == 0:
            return _pad_with_twos((), n, True)
        if second == 3:  # the tail is necessarily empty here
            return _pad_with_twos((4, 3), n, True)
        if second % 2 == 0:
            return _pad_with_twos((second, second) + tail, n, True)
        return _pad_with_twos((second - 1, second - 1) + tail, n, False)
    if second == 0:
        return _pad_with_twos((), n, False)
    if second % 2 == 1:
        return _pad_with_twos((second + 1, second) + tail, n, False)
    if largest - second == 2:
        return _pad_with_twos((second, second) + tail, n, False)
    return _pad_with_twos((second + 2, second + 1) + tail, n, True)


def b5_exchange_inverse(q: Partition) -> Partition:
    _require(in_set_a5(q) or in_set_b5(q), q, "expected a member of A union B")
    total = q.weight
    if q[0] == 2:  # nothing but filler: the preimage was the singleton (n)
        return _exact((total,))
    ones = q.multiplicity(1)
    twos = q.multiplicity(2)
    body = tuple(q[: len(q) - ones - twos])
    a = q[0]
    if q[1] == a:  # A side: even largest repeated
        if ones:
            return _exact((a + 2 * twos + 1,) + body[1:])
        if twos == 1:
            return _exact((a + 2,) + body[1:])
        _require(twos >= 2, q, "an A-side image needs a part 1 or at least one filler 2")
        return _exact((a + 2 * twos - 1, a + 1) + body[2:])
    # B side: shape (a, a-1, ...)
    if ones:
        if a == 4:
            return _exact((total - 3, 3))
        return _exact((a + 2 * twos + 2, a - 2) + body[2:])
    return _exact((a + 2 * twos,) + body[1:])


# thm5.total: the assembled decomposition POD_GT2(n) -> O2(n) union O2(n-3),
# defined for weights above the identity threshold of 4.


def b5_total_forward(p: Partition) -> TaggedPreimage:
    _require(
        is_member(p, PartitionClass.POD_GT2) and p.weight >= 5,
        p,
        "expected a POD_GT2 member of weight at least 5",
    )
    largest = p[0]
    if largest % 2 == 0 and len(p) > 1:
        if p[1] == largest:
            return TaggedPreimage(0, p)  # already an O2 member with parts >= 3
        if p[1] == largest - 1:
            return TaggedPreimage(-3, _shift_down(p))
    q = b5_exchange_forward(p)
    if q[1] == q[0]:
        return TaggedPreimage(0, q)
    return TaggedPreimage(-3, _shift_down(q))


def b5_total_inverse(tagged: TaggedPreimage) -> Partition:
    q = tagged.partition
    _require(is_member(q, PartitionClass.O2), q, "expected an O2 member")
    if tagged.offset == 0:
        _require(q.weight >= 5, q, "the weight-n bucket starts at weight 5")
        if q[-1] > 2:
            return q
        return b5_exchange_inverse(q)
    if tagged.offset == -3:
        lifted = _shift_up(q)
        if lifted[-1] > 2:
            return lifted
        return b5_exchange_inverse(lifted)
    raise DomainError(f"unknown bucket offset {tagged.offset!r} (expected 0 or -3)")


# ---------------------------------------------------------------------------
# thm6.add / thm6.sub: reconstructions of the O3 analogues of thm3.


def b6_add_forward(p: Partition) -> Partition:
    _require(is_member(p, PartitionClass.O3), p, "expected an O3 member")
    return _exact((p[0] + 1,) + tuple(p[1:]))


def b6_add_inverse(q: Partition) -> Partition:
    _require(
        _b6_add_in_codomain(q), q, "expected POD of weight >= 3, odd largest, gap of 2 below"
    )
    return _exact((q[0] - 1,) + tuple(q[1:]))


def _b6_add_in_codomain(q: Partition) -> bool:
    return (
        bool(q)
        and q[0] % 2 == 1
        and q.weight >= 3
        and (len(q) == 1 or q[1] <= q[0] - 2)
        and is_member(q, PartitionClass.POD)
    )


def b6_sub_forward(p: Partition) -> Partition:
    _require(
        is_member(p, PartitionClass.O3) and p.weight >= 5,
        p,
        "expected an O3 member of weight at least 5",
    )
    return Partition((p[0] - 2,) + tuple(p[1:]))  # may need re-sorting


def b6_sub_inverse(q: Partition) -> Partition:
    _require(
        _b6_sub_in_codomain(q),
        q,
        "expected POD of weight >= 3 with even largest part or shape (L, L-1, ...)",
    )
    if q[0] % 2 == 0:
        return _exact((q[0] + 2,) + tuple(q[1:]))
    return _exact((q[0] + 1, q[0]) + tuple(q[2:]))


def _b6_sub_in_codomain(q: Partition) -> bool:
    if not q or q.weight < 3 or not is_member(q, PartitionClass.POD):
        return False
    return q[0] % 2 == 0 or (len(q) > 1 and q[1] == q[0] - 1)


# ---------------------------------------------------------------------------
# Registry


@dataclass(frozen=True)
class Bijection:
    """A plain weight-shifting bijection with enumerable domain and codomain.

    The predicates take a candidate partition; weight gates are part of the
    predicate.  An audit at identity weight n enumerates the codomain at
    weight n and the domain at weight n - weight_shift.
    """

    id: BijectionId
    weight_shift: int
    forward: Callable[[Partition], Partition]
    inverse: Callable[[Partition], Partition]
    in_domain: Callable[[Partition], bool]
    in_codomain: Callable[[Partition], bool]
    reconstructed: bool = False
    summary: str = ""

    @property
    def name(self) -> str:
        return self.id.value


@dataclass(frozen=True)
class TotalDecomposition:
    """A tagged two-bucket decomposition of one class into another.

    forward sends a `domain_class` member of weight n to a `bucket_class`
    member of weight n or n-3 together with the bucket tag; over all of
    domain_class(n) the two buckets fill bucket_class(n) and
    bucket_class(n-3) exactly.  min_weight gates the domain.
    """

    id: BijectionId
    domain_class: PartitionClass
    bucket_class: PartitionClass
    offsets: tuple[int, int]
    min_weight: int
    forward: Callable[[Partition], TaggedPreimage]
    inverse: Callable[[TaggedPreimage], Partition]
    reconstructed: bool = False
    summary: str = ""

    @property
    def name(self) -> str:
        return self.id.value


def _in_class(partition_class: PartitionClass) -> Callable[[Partition], bool]:
    return lambda p: is_member(p, partition_class)


REGISTRY: dict[BijectionId, Bijection | TotalDecomposition] = {
    BijectionId.B1: Bijection(
        BijectionId.B1,
        1,
        b1_forward,
        b1_inverse,
        _in_class(PartitionClass.D1),
        _b1_in_codomain,
        summary="raise one copy of the odd largest part by 1",
    ),
    BijectionId.B2_SHIFT: Bijection(
        BijectionId.B2_SHIFT,
        3,
        b2_shift_forward,
        b2_shift_inverse,
        _in_class(PartitionClass.D2),
        _b2_shift_in_codomain,
        summary="add 2 and 1 to the two leading parts",
    ),
    BijectionId.B2_EXCHANGE_CA: Bijection(
        BijectionId.B2_EXCHANGE_CA,
        0,
        b2_exchange_ca_forward,
        b2_exchange_ca_inverse,
        lambda p: in_set_c2(p) and not in_set_c2_prime(p),
        lambda p: in_set_a2(p) and not in_set_a2_prime(p),
        summary="trade the even largest part for a doubled second part plus 1s",
    ),
    BijectionId.B2_EXCHANGE_DB: Bijection(
        BijectionId.B2_EXCHANGE_DB,
        0,
        b2_exchange_db_forward,
        b2_exchange_db_inverse,
        lambda p: in_set_d2(p) and not in_set_d2_prime(p),
        lambda p: in_set_b2(p) and not in_set_b2_prime(p),
        summary="push the odd largest part onto the second plus filler 1s",
    ),
    BijectionId.B2_EXCEPTIONAL: Bijection(
        BijectionId.B2_EXCEPTIONAL,
        0,
        b2_exceptional_forward,
        b2_exceptional_inverse,
        lambda p: in_set_c2_prime(p) or in_set_d2_prime(p),
        lambda p: in_set_a2_prime(p) or in_set_b2_prime(p),
        summary="finite trade between the primed shapes",
    ),
    BijectionId.B2_TOTAL: TotalDecomposition(
        BijectionId.B2_TOTAL,
        PartitionClass.PED_GT1,
        PartitionClass.D2,
        (0, -3),
        1,
        b2_total_forward,
        b2_total_inverse,
        summary="split PED_GT1(n) across D2(n) and D2(n-3)",
    ),
    BijectionId.B3_ADD: Bijection(
        BijectionId.B3_ADD,
        1,
        b3_add_forward,
        b3_add_inverse,
        _in_class(PartitionClass.D3),
        _b3_add_in_codomain,
        summary="raise the unique odd largest part by 1",
    ),
    BijectionId.B3_SUB: Bijection(
        BijectionId.B3_SUB,
        -2,
        b3_sub_forward,
        b3_sub_inverse,
        lambda p: is_member(p, PartitionClass.D3) and p.weight >= 3,
        _b3_sub_in_codomain,
        summary="lower the unique odd largest part by 2 and re-sort",
    ),
    BijectionId.B4: Bijection(
        BijectionId.B4,
        1,
        b4_forward,
        b4_inverse,
        _in_class(PartitionClass.O1),
        _b4_in_codomain,
        reconstructed=True,
        summary="raise one copy of the even largest part by 1",
    ),
    BijectionId.B5_SHIFT: Bijection(
        BijectionId.B5_SHIFT,
        3,
        b5_shift_forward,
        b5_shift_inverse,
        _in_class(PartitionClass.O2),
        _b5_shift_in_codomain,
        summary="add 2 and 1 to the two leading parts",
    ),
    BijectionId.B5_EXCHANGE: Bijection(
        BijectionId.B5_EXCHANGE,
        0,
        b5_exchange_forward,
        b5_exchange_inverse,
        lambda p: in_set_c5(p) or in_set_d5(p),
        lambda p: in_set_a5(p) or in_set_b5(p),
        summary="trade the largest part for repeated parts plus filler 2s",
    ),
    BijectionId.B5_TOTAL: TotalDecomposition(
        BijectionId.B5_TOTAL,
        PartitionClass.POD_GT2,
        PartitionClass.O2,
        (0, -3),
        5,
        b5_total_forward,
        b5_total_inverse,
        summary="split POD_GT2(n) across O2(n) and O2(n-3)",
    ),
    BijectionId.B6_ADD: Bijection(
        BijectionId.B6_ADD,
        1,
        b6_add_forward,
        b6_add_inverse,
        _in_class(PartitionClass.O3),
        _b6_add_in_codomain,
        reconstructed=True,
        summary="raise the unique even largest part by 1",
    ),
    BijectionId.B6_SUB: Bijection(
        BijectionId.B6_SUB,
        -2,
        b6_sub_forward,
        b6_sub_inverse,
        lambda p: is_member(p, PartitionClass.O3) and p.weight >= 5,
        _b6_sub_in_codomain,
        reconstructed=True,
        summary="lower the unique even largest part by 2 and re-sort",
    ),
}


def get_bijection(key: "BijectionId | str") -> "Bijection | TotalDecomposition":
    """Look a map up by BijectionId or by its stable dotted name."""
    if isinstance(key, str):
        key = BijectionId.from_name(key)
    return REGISTRY[key]


def bijection_names() -> list[str]:
    return sorted(member.value for member in BijectionId)
