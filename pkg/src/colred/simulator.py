"""Synchronous-round execution on coloured paths and cycles.

A round recolours every node simultaneously from its own colour and its two
neighbours' colours. Path endpoints are padded with a virtual neighbour
carrying the smallest palette colour different from their own, so the same
three-argument rule applies everywhere. `run_chain` iterates rounds through
a list of rules with strictly shrinking palettes and records a trace; the
default chain takes any palette up to 2**462 + 12 down to 3 colours in
three rounds.

Also here: the two classical baselines (one-colour-per-round elimination
and the bitwise reduction from 2**b colours to 2b) and a seeded proper
colouring generator, all used as independent comparison points in tests.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field

from .compiler import AlgorithmTable, ImplicitAlgorithm, _edge_pair_masks
from .core import Collection, NotColourfulError, base_collection_c3, construct

TOPOLOGIES = ("path", "cycle")


class PaletteMismatchError(ValueError):
    """A graph's palette does not fit the algorithm or chain stage."""


class ImproperColouringError(ValueError):
    """A colouring violated properness where a proper one was required."""

    def __init__(self, message: str, violations=()):
        self.violations = tuple(violations)
        super().__init__(message)


@dataclass(frozen=True)
class Violation:
    """One properness defect: kind "adjacent" (edge position, position+1,
    wrapping for cycles) or "range" (node position, colour > k)."""

    kind: str
    position: int
    detail: str


@dataclass(frozen=True)
class ColouredGraph:
    """A coloured path or cycle; node i sits between nodes i-1 and i+1.

    `k` is the declared palette bound, not necessarily attained. The
    colouring is not required to be proper here; `validate` reports
    defects. `oriented` marks index order as the successor direction,
    which only the bitwise baseline consumes.
    """

    topology: str
    colours: tuple[int, ...]
    k: int
    oriented: bool = False

    def __post_init__(self) -> None:
        if self.topology not in TOPOLOGIES:
            raise ValueError(f"topology must be one of {TOPOLOGIES}, got {self.topology!r}")
        if not isinstance(self.colours, tuple):
            object.__setattr__(self, "colours", tuple(self.colours))
        n = len(self.colours)
        if n < 1:
            raise ValueError("graphs need at least one node")
        if self.topology == "cycle" and n < 3:
            raise ValueError(f"cycles need at least three nodes, got {n}")
        if self.k < 1:
            raise ValueError(f"palette bound must be positive, got {self.k}")
        for pos, colour in enumerate(self.colours):
            if not isinstance(colour, int) or colour < 1:
                raise ValueError(f"node {pos} has malformed colour {colour!r}")

    @property
    def n(self) -> int:
        return len(self.colours)

    def digest(self) -> str:
        payload = f"{self.topology}:{self.k}:" + ",".join(map(str, self.colours))
        return hashlib.sha256(payload.encode()).hexdigest()

    def __repr__(self) -> str:
        if self.n <= 12:
            cols = "(" + ",".join(map(str, self.colours)) + ")"
        else:
            head = ",".join(map(str, self.colours[:4]))
            cols = f"({head},... n={self.n})"
        return f"<ColouredGraph {self.topology} k={self.k} {cols}>"


def validate(g: ColouredGraph) -> list[Violation]:
    """Every adjacent equal-colour pair and every out-of-range colour.

    Empty list means the colouring is proper and within [k]. Adjacent
    violations carry the left index of the offending edge; on cycles the
    edge (n-1, 0) reports position n-1.
    """
    out = []
    cols = g.colours
    n = len(cols)
    for pos, colour in enumerate(cols):
        if colour > g.k:
            out.append(
                Violation("range", pos, f"node {pos} has colour {colour} > k={g.k}")
            )
    for pos in range(n - 1):
        if cols[pos] == cols[pos + 1]:
            out.append(
                Violation(
                    "adjacent", pos, f"nodes {pos} and {pos + 1} share colour {cols[pos]}"
                )
            )
    if g.topology == "cycle" and cols[-1] == cols[0]:
        out.append(
            Violation(
                "adjacent", n - 1, f"nodes {n - 1} and 0 share colour {cols[0]}"
            )
        )
    return out


def _virtual_neighbour(own: int) -> int:
    return 1 if own != 1 else 2


def _require_proper(g: ColouredGraph, context: str) -> None:
    violations = validate(g)
    if violations:
        raise ImproperColouringError(
            f"{context}: {violations[0].detail}"
            + (f" (+{len(violations) - 1} more)" if len(violations) > 1 else ""),
            violations,
        )


def _as_rule(alg):
    if isinstance(alg, Collection):
        return ImplicitAlgorithm(alg)
    if isinstance(alg, (ImplicitAlgorithm, AlgorithmTable)):
        return alg
    raise TypeError(f"not a one-round rule: {alg!r}")


def _rule_label(alg) -> str:
    return alg.label or f"table(k={alg.k})"


def _step_table(cols, n, topology, table):
    e = table.entries
    if topology == "cycle":
        return [
            e[(cols[i - 1], cols[i], cols[(i + 1) % n])] for i in range(n)
        ]
    out = []
    for i in range(n):
        y = cols[i]
        x = cols[i - 1] if i > 0 else _virtual_neighbour(y)
        z = cols[i + 1] if i < n - 1 else _virtual_neighbour(y)
        out.append(e[(x, y, z)])
    return out


def _step_implicit(cols, n, topology, coll):
    # one disjoint-pair computation per edge, shared by both endpoints
    def sides(a, b):
        lo, hi = (a, b) if a < b else (b, a)
        p, q = _edge_pair_masks(coll, lo, hi)
        return (p, q) if a == lo else (q, p)

    left = [0] * n
    right = [0] * n
    if topology == "cycle":
        for i in range(n):
            j = (i + 1) % n
            right[i], left[j] = sides(cols[i], cols[j])
    else:
        _, left[0] = sides(_virtual_neighbour(cols[0]), cols[0])
        for i in range(n - 1):
            right[i], left[i + 1] = sides(cols[i], cols[i + 1])
        _, right[n - 1] = sides(_virtual_neighbour(cols[-1]), cols[-1])
    out = []
    for i in range(n):
        meet = left[i] & right[i]
        if not meet:
            raise NotColourfulError(
                f"node {i} (colour {cols[i]}) received disjoint subsets; "
                "the collection is not colourful"
            )
        out.append((meet & -meet).bit_length())
    return out


def step(g: ColouredGraph, alg) -> ColouredGraph:
    """One synchronous round of `alg` on every node of `g`.

    `alg` may be a tabulated rule, an implicit rule, or a bare collection.
    The input must be proper and fit the rule's input palette; the output
    is validated against the rule's output palette before being returned,
    and any defect there aborts loudly since it can only be a bug.
    """
    alg = _as_rule(alg)
    if g.k > alg.k:
        raise PaletteMismatchError(
            f"graph palette {g.k} exceeds the rule's input palette {alg.k}"
        )
    _require_proper(g, "input colouring is not proper")
    cols = g.colours
    n = len(cols)
    if isinstance(alg, AlgorithmTable):
        out = _step_table(cols, n, g.topology, alg)
    else:
        out = _step_implicit(cols, n, g.topology, alg.collection)
    result = ColouredGraph(g.topology, tuple(out), alg.c, g.oriented)
    _require_proper(result, "round output is not proper (rule or collection bug)")
    return result


@dataclass(frozen=True)
class RoundRecord:
    """One executed round: rule identifier, palettes, output digest.

    `colours` carries the full output snapshot only when the chain was run
    with snapshots enabled.
    """

    stage: str
    k_in: int
    k_out: int
    digest: str
    colours: tuple[int, ...] | None = None


@dataclass(frozen=True)
class ChainTrace:
    """Per-round records of an iterated reduction; palettes strictly drop."""

    rounds: tuple[RoundRecord, ...] = field(default_factory=tuple)

    def palettes(self, k0: int) -> tuple[int, ...]:
        return (k0, *(r.k_out for r in self.rounds))

    def palette_line(self, k0: int) -> str:
        return " ▷ ".join(str(k) for k in self.palettes(k0))

    def __len__(self) -> int:
        return len(self.rounds)


def run_chain(g: ColouredGraph, chain, *, snapshots: bool = False):
    """Iterate `step` through `chain`, returning (final graph, trace).

    Each stage must accept the current palette and strictly shrink it,
    mirroring the trace invariant that palettes decrease. An empty chain
    returns the graph unchanged.
    """
    trace = []
    for stage_alg in chain:
        rule = _as_rule(stage_alg)
        if g.k > rule.k:
            raise PaletteMismatchError(
                f"stage {len(trace) + 1} ({_rule_label(rule)}) takes palettes up to "
                f"{rule.k}, got {g.k}"
            )
        if rule.c >= g.k:
            raise PaletteMismatchError(
                f"stage {len(trace) + 1} ({_rule_label(rule)}) would not shrink the "
                f"palette: {g.k} to {rule.c}"
            )
        k_in = g.k
        g = step(g, rule)
        trace.append(
            RoundRecord(
                stage=_rule_label(rule),
                k_in=k_in,
                k_out=g.k,
                digest=g.digest(),
                colours=g.colours if snapshots else None,
            )
        )
    return g, ChainTrace(tuple(trace))


def default_chain() -> list[ImplicitAlgorithm]:
    """The headline three-round chain: 2**462 + 12 colours down to 3."""
    return [
        ImplicitAlgorithm(construct(12)),
        ImplicitAlgorithm(construct(4)),
        ImplicitAlgorithm(base_collection_c3()),
    ]


def naive_step(g: ColouredGraph) -> ColouredGraph:
    """Eliminate the single colour class k: those nodes take the smallest
    colour in {1,2,3} no neighbour holds; everyone else keeps their colour.

    Needs k >= 4 so that {1,2,3} minus two neighbour colours is never
    empty. Endpoints consider their one real neighbour only. One palette
    colour disappears per round, the k-round baseline to contrast with
    three-round chains.
    """
    if g.k <= 3:
        raise ValueError(
            f"cannot eliminate colour {g.k}: reduction below 3 colours is not a "
            "local operation on paths and cycles"
        )
    _require_proper(g, "input colouring is not proper")
    cols = g.colours
    n = len(cols)
    out = list(cols)
    for i in range(n):
        if cols[i] != g.k:
            continue
        if g.topology == "cycle":
            neighbours = {cols[i - 1], cols[(i + 1) % n]}
        else:
            neighbours = set()
            if i > 0:
                neighbours.add(cols[i - 1])
            if i < n - 1:
                neighbours.add(cols[i + 1])
        out[i] = min({1, 2, 3} - neighbours)
    result = ColouredGraph(g.topology, tuple(out), g.k - 1, g.oriented)
    _require_proper(result, "elimination round output is not proper (bug)")
    return result


def cole_vishkin_value(pred: int, own: int) -> int:
    """Bitwise reduction at one node, on 0-based colour values.

    i is the lowest bit position where `own` differs from `pred`; the
    result packs (i, own's bit i) as 2*i + bit.
    """
    if pred == own:
        raise ValueError(f"adjacent colours are equal ({own}); input not proper")
    d = (pred ^ own) & -(pred ^ own)
    i = d.bit_length() - 1
    return 2 * i + (own >> i & 1)


def cole_vishkin_step(g: ColouredGraph, b: int) -> ColouredGraph:
    """One bitwise-reduction round: palette 2**b down to 2b.

    Consumes the orientation: each node compares its colour with its
    predecessor's (node i-1). The first node of a path has none and uses a
    virtual predecessor of its own colour with bit 0 flipped. Colours are
    1-based on the graph and 0-based inside the bit rule, shifted at this
    boundary.
    """
    if not g.oriented:
        raise ValueError("bitwise reduction needs an oriented graph")
    if b < 1:
        raise ValueError(f"bit width must be positive, got {b}")
    _require_proper(g, "input colouring is not proper")
    cols = g.colours
    for pos, colour in enumerate(cols):
        if colour - 1 >> b:
            raise ValueError(
                f"node {pos} has colour {colour}, outside 1..2**{b}"
            )
    n = len(cols)
    out = []
    for i in range(n):
        own = cols[i] - 1
        if i == 0 and g.topology == "path":
            pred = own ^ 1
        else:
            pred = cols[i - 1] - 1
        out.append(cole_vishkin_value(pred, own) + 1)
    result = ColouredGraph(g.topology, tuple(out), 2 * b, g.oriented)
    _require_proper(result, "bitwise round output is not proper (bug)")
    return result


def _rand_excluding(rng: random.Random, k: int, excluded) -> int:
    """Uniform colour in [k] minus `excluded`, using one rng draw."""
    banned = sorted(set(excluded))
    r = rng.randrange(1, k - len(banned) + 1)
    for e in banned:
        if r >= e:
            r += 1
    return r


def random_proper(
    topology: str, n: int, k: int, seed: int, *, oriented: bool = False
) -> ColouredGraph:
    """Seeded proper colouring: each node drawn uniformly over the colours
    its already-coloured neighbours do not hold.

    Feasibility: paths need k >= 2 (k = 1 only for the single node), even
    cycles k >= 2, odd cycles k >= 3. One rng draw per node, so the result
    is deterministic in (topology, n, k, seed) even for 100-digit k.
    """
    if topology not in TOPOLOGIES:
        raise ValueError(f"topology must be one of {TOPOLOGIES}, got {topology!r}")
    if n < 1:
        raise ValueError(f"need at least one node, got n={n}")
    if topology == "path":
        if k < 2 and n > 1:
            raise ValueError(f"paths with {n} nodes need k >= 2, got k={k}")
        if k < 1:
            raise ValueError(f"palette must be positive, got k={k}")
    else:
        if n < 3:
            raise ValueError(f"cycles need n >= 3, got n={n}")
        if k < 3 and n % 2:
            raise ValueError(f"odd cycles are not {k}-colourable")
        if k < 2:
            raise ValueError(f"cycles need k >= 2, got k={k}")
    rng = random.Random(seed)
    cols = [rng.randrange(1, k + 1)]
    if topology == "path":
        for _ in range(1, n):
            cols.append(_rand_excluding(rng, k, (cols[-1],)))
    else:
        for _ in range(1, n - 1):
            cols.append(_rand_excluding(rng, k, (cols[-1],)))
        cols.append(_rand_excluding(rng, k, (cols[-1], cols[0])))
    return ColouredGraph(topology, tuple(cols), k, oriented)
