"""Leading-term combinatorics of the degeneration determinant.

Row blocks of the condition matrix are indexed by points, so the
determinant expands as a signed sum over ordered partitions of the columns
into per-point blocks, each summand a product of monomial minors.  Each
minor is a Wronskian of power functions (times z for every g-column), so
its value comes from the closed form in :mod:`.algebra.wronskian` rather
than from elimination; summing the partitions that attain the
lexicographically largest monomial reproduces the leading coefficient of
the determinant, and summing all of them reproduces the determinant itself.

When the f- and g-blocks share column degrees (the overlap), several
partitions can attain the leading monomial.  Those partitions have a rigid
shape: a first block contributing one overlap column, middle blocks of two,
a final block of one, subject to chaining rules on the letters:

* after a block ends with letter a (resp. b) at overlap index j, the next
  block starts with the other letter at index j;
* a block starting with a_j continues with a_{j+1} or b_{j+1};
* a block starting with b_j continues with b_{j+1}.

The alternating sum over these partitions with per-block integer weights is
the sigma invariant; its nonvanishing is the combinatorial heart of the
nonvanishing of the determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import factorial

from .algebra.multipoly import MultiPoly
from .algebra.wronskian import wronskian_closed_form
from .degeneracy import Column, degeneracy_det, layout
from .divisor import MultiplicityVector
from .errors import InputError

OverlapColumn = tuple[str, int]  # ("a" | "b", 1-based index into the overlap)


@dataclass(frozen=True)
class OverlapSpec:
    """Columns shared in degree between the f-block and the g-block.

    ``width`` may come out negative (disjoint degrees); ``s`` clamps it at
    0.  Pair i consists of the f-column a_i and the g-column b_i, both of
    degree ``top_degree`` - (i - 1); a_1 has the highest overlapping degree
    and a_s the lowest, which equals m1.
    """

    mult: MultiplicityVector
    e: int
    width: int

    @property
    def s(self) -> int:
        return max(0, self.width)

    @property
    def top_degree(self) -> int:
        return self.e - self.mult[1] + 1

    @property
    def a_degrees(self) -> tuple[int, ...]:
        return tuple(self.top_degree - i for i in range(self.s))

    @property
    def b_degrees(self) -> tuple[int, ...]:
        return self.a_degrees


def overlap(mult: MultiplicityVector) -> OverlapSpec:
    lay = layout(mult)  # validates parity and block sizes
    width = mult.total // 2 + 1 - (mult[0] + mult[1])
    return OverlapSpec(mult=mult, e=lay.e, width=width)


@dataclass(frozen=True)
class AdmissiblePartition:
    """An ordered distribution of overlap columns to row blocks.

    ``blocks`` lists, per block, its overlap columns in matrix order; the
    sign is the parity of the column word against the natural order (all
    a-columns by index, then all b-columns).
    """

    blocks: tuple[tuple[OverlapColumn, ...], ...]
    sign: int


def _word_sign(word: list[OverlapColumn], low: int, high: int) -> int:
    natural = [("a", i) for i in range(low, high + 1)]
    natural += [("b", i) for i in range(low, high + 1)]
    position = {col: p for p, col in enumerate(natural)}
    perm = [position[col] for col in word]
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def _other(letter: str) -> str:
    return "b" if letter == "a" else "a"


def _admissible(low: int, high: int, nblocks: int) -> list[AdmissiblePartition]:
    """Partitions of {a_low..a_high, b_low..b_high} into the rigid block shape."""
    results: list[AdmissiblePartition] = []

    def extend(
        blocks: list[tuple[OverlapColumn, ...]],
        forced: OverlapColumn,
        next_index: dict[str, int],
    ) -> None:
        letter, idx = forced
        if idx != next_index[letter]:
            return
        if len(blocks) == nblocks - 1:
            # last block: a single column, necessarily at the final index
            if idx != high:
                return
            final = dict(next_index)
            final[letter] = idx + 1
            if final["a"] != high + 1 or final["b"] != high + 1:
                return
            full = blocks + [(forced,)]
            word = [c for b in full for c in b]
            results.append(
                AdmissiblePartition(blocks=tuple(full), sign=_word_sign(word, low, high))
            )
            return
        if idx + 1 > high:
            return
        seconds: list[OverlapColumn] = [(letter, idx + 1)]
        if letter == "a":
            seconds.append(("b", idx + 1))
        after_first = dict(next_index)
        after_first[letter] = idx + 1
        for second in seconds:
            if second[1] != after_first[second[0]]:
                continue
            consumed = dict(after_first)
            consumed[second[0]] = second[1] + 1
            extend(
                blocks + [(forced, second)],
                (_other(second[0]), second[1]),
                consumed,
            )

    for first_letter in ("a", "b"):
        first: OverlapColumn = (first_letter, low)
        consumed = {"a": low, "b": low}
        consumed[first_letter] = low + 1
        extend([(first,)], (_other(first_letter), low), consumed)
    return results


def enumerate_admissible(
    spec: OverlapSpec, block_sizes: tuple[int, ...] | list[int]
) -> list[AdmissiblePartition]:
    """All admissible partitions of the trailing overlap columns.

    ``block_sizes`` are the row-block multiplicities (for the first block
    and every block after it): the first block contributes a single overlap
    column, every following block except the last two of them, the last one
    again.  With u blocks this consumes the last u - 1 overlap pairs.  An
    overlap of width 0 admits exactly the empty partition.
    """
    sizes = tuple(int(b) for b in block_sizes)
    if spec.s == 0:
        return [AdmissiblePartition(blocks=(), sign=1)]
    if len(sizes) < 2:
        raise InputError("need at least two blocks to split the overlap")
    if any(b < 2 for b in sizes):
        raise InputError(f"block sizes must be at least 2: {sizes}")
    if len(sizes) > 2 and any(b != 2 for b in sizes[1:]):
        raise InputError(
            f"with more than two blocks the trailing sizes must all be 2: {sizes}"
        )
    pairs = len(sizes) - 1
    low = spec.s - pairs + 1
    if low < 1:
        raise InputError(
            f"{len(sizes)} blocks would need {pairs} overlap pairs, only {spec.s} exist"
        )
    return _admissible(low, spec.s, len(sizes))


def _block_weight(
    position: int, nblocks: int, block: tuple[OverlapColumn, ...], m_first: int
) -> int:
    """Integer weight of one block in the sigma sum.

    First block (one column): 1 for an a-column, m_first for a b-column.
    Every later block: -1 when its columns stay within one letter, -2 when
    they mix letters; the final single-column block counts as mixed for an
    a-column (its partner below the overlap is a g-column) and unmixed for
    a b-column.
    """
    if position == 0:
        return 1 if block[0][0] == "a" else m_first
    if position == nblocks - 1:
        return -1 if block[0][0] == "b" else -2
    return -1 if block[0][0] == block[1][0] else -2


def sigma(m_first: int, width: int) -> int:
    """Alternating weighted count of admissible partitions over ``width`` blocks.

    ``m_first`` is the multiplicity of the block contributing the first
    overlap column; all following blocks have multiplicity 2.  Satisfies
    sigma(2, 2) = 3, sigma(2, 3) = -4, the recursion
    sigma(2, u) = sigma(2, u-2) + (-1)^u * 2 * sigma(2, u-1), and the closed
    form :func:`sigma_closed_form`; never zero in range.
    """
    if m_first < 2:
        raise InputError(f"first block multiplicity must be >= 2, got {m_first}")
    if width < 2:
        raise InputError(f"need at least 2 blocks, got {width}")
    total = 0
    for partition in _admissible(1, width - 1, width):
        weight = 1
        for pos, block in enumerate(partition.blocks):
            weight *= _block_weight(pos, width, block, m_first)
        total += partition.sign * weight
    return total


def sigma_closed_form(m_first: int, width: int) -> int:
    """(-1)^ceil((width+2)/2) * ((m_first - 1)*width + 1)."""
    if m_first < 2 or width < 2:
        raise InputError("closed form needs m_first >= 2 and width >= 2")
    sign = (-1) ** ((width + 3) // 2)
    return sign * ((m_first - 1) * width + 1)


def two_block_closed_form(m_first: int, m_last: int) -> int:
    """pi * (m_last - 1)! * (1 - m_first*m_last) with pi = prod_{j<m_last-1} j!.

    The two-block form carries the opposite sign from the sigma enumeration
    seeded at sigma(2, 2) = 3; tests pin the relationship against the
    symbolic determinant.
    """
    if m_first < 2 or m_last < 2:
        raise InputError("two-block form needs multiplicities >= 2")
    pi = 1
    for j in range(1, m_last - 1):
        pi *= factorial(j)
    return pi * factorial(m_last - 1) * (1 - m_first * m_last)


# -- full Laplace expansion against the symbolic determinant ----------------


def minor_monomial(columns: tuple[Column, ...]) -> tuple[int, int] | None:
    """(z-degree, coefficient) of the minor on ``columns``; None when singular.

    The minor's rows are derivative orders 0..len(columns)-1, so up to the
    sign of sorting the powers it is the monomial Wronskian; each g-column
    contributes one extra factor of z.  Two columns of equal power are
    proportional and kill the minor.
    """
    powers = [c.power for c in columns]
    if len(set(powers)) != len(powers):
        return None
    inversions = sum(
        1
        for i in range(len(powers))
        for j in range(i + 1, len(powers))
        if powers[i] < powers[j]
    )
    degree, coeff = wronskian_closed_form(sorted(powers, reverse=True))
    if inversions % 2:
        coeff = -coeff
    g_count = sum(1 for c in columns if c.kind == "g")
    return degree + g_count, coeff


def _ordered_partitions(indices: tuple[int, ...], sizes: tuple[int, ...]):
    if not sizes:
        yield ()
        return
    for head in combinations(indices, sizes[0]):
        head_set = set(head)
        rest = tuple(i for i in indices if i not in head_set)
        for tail in _ordered_partitions(rest, sizes[1:]):
            yield (head,) + tail


def _partition_sign(partition: tuple[tuple[int, ...], ...]) -> int:
    word = [i for block in partition for i in block]
    inversions = sum(
        1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j]
    )
    return -1 if inversions % 2 else 1


def _contributions(mult: MultiplicityVector):
    """Yield (partition, per-point z-exponents, integer coefficient)."""
    lay = layout(mult)
    sizes = tuple(mult.entries[2:])
    indices = tuple(range(lay.size))
    for partition in _ordered_partitions(indices, sizes):
        exps = []
        coeff = _partition_sign(partition)
        for block in partition:
            data = minor_monomial(tuple(lay.columns[i] for i in block))
            if data is None:
                coeff = 0
                break
            zdeg, c = data
            exps.append(zdeg)
            coeff *= c
        if coeff:
            yield partition, tuple(exps), coeff


def laplace_expansion(mult: MultiplicityVector) -> MultiPoly:
    """The determinant rebuilt from closed-form minors (an independent route)."""
    nvars = mult.n - 2
    terms: dict[tuple[int, ...], int] = {}
    for _, exps, coeff in _contributions(mult):
        new = terms.get(exps, 0) + coeff
        if new:
            terms[exps] = new
        else:
            terms.pop(exps, None)
    return MultiPoly(nvars, terms)


@dataclass(frozen=True)
class LeadingCheckResult:
    match: bool
    exponents: tuple[int, ...]
    determinant_coeff: int
    laplace_coeff: int
    attaining_partitions: int


def leading_coefficient_check(mult: MultiplicityVector) -> LeadingCheckResult:
    """Compare the determinant's leading monomial against the partition sum.

    The prediction takes the lexicographically largest monomial over all
    nonsingular partition products and sums the signed coefficients of the
    partitions attaining it; agreement with the leading term of the
    elimination determinant checks the whole sign convention.
    """
    det = degeneracy_det(mult)
    det_exps, det_coeff = det.leading_term()

    best: tuple[int, ...] | None = None
    coeff_sum = 0
    attaining = 0
    for _, exps, coeff in _contributions(mult):
        if best is None or exps > best:
            best = exps
            coeff_sum = coeff
            attaining = 1
        elif exps == best:
            coeff_sum += coeff
            attaining += 1
    if best is None:
        raise InputError(f"every partition product vanishes for {mult}")
    match = best == det_exps and coeff_sum == det_coeff
    return LeadingCheckResult(
        match=match,
        exponents=best,
        determinant_coeff=det_coeff,
        laplace_coeff=coeff_sum,
        attaining_partitions=attaining,
    )
