"""
Deterministic generators for the graph families handled by the colorers,
the class-2± construction, and signatures.

Random generators draw from numpy's PCG64 (``numpy.random.default_rng``)
seeded explicitly; the seed is recorded in the graph metadata.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterator, Optional, Sequence

import networkx as nx
import numpy as np

from .config import Config
from .exceptions import IndexOutOfRange, InvalidSpec
from .models import NEGATIVE, POSITIVE, Graph, Signature

logger = logging.getLogger(__name__)


class Family(Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    WHEEL = "wheel"
    NECKLACE = "necklace"
    COMPLETE_BIPARTITE = "complete_bipartite"
    RANDOM_CACTUS = "random_cactus"
    CLASS2PM = "class2pm"

    @classmethod
    def from_string(cls, value: str) -> "Family":
        normalized = value.strip().lower().replace("-", "_")
        for family in cls:
            if family.value == normalized:
                return family
        raise InvalidSpec(f"unknown family: {value}")

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class FamilySpec:
    """
    Parameters of a generated family.

    ``sizes`` holds the integer parameters: vertex count for path, cycle,
    wheel and random_cactus; leaf count for star; (r, t) for
    complete_bipartite; k for class2pm. ``lengths`` are the necklace path
    lengths.
    """

    family: Family
    sizes: tuple[int, ...] = ()
    lengths: tuple[int, ...] = ()
    seed: Optional[int] = None
    cycle_probability: float = Config.CACTUS_CYCLE_PROBABILITY
    max_cycle: int = Config.CACTUS_MAX_CYCLE

    @classmethod
    def parse(cls, family: str, params: Sequence[str], seed: Optional[int] = None) -> "FamilySpec":
        fam = Family.from_string(family)
        try:
            values = tuple(int(p) for p in params)
        except ValueError:
            raise InvalidSpec(f"family parameters must be integers: {' '.join(params)}")
        if fam == Family.NECKLACE:
            return cls(fam, lengths=values, seed=seed)
        return cls(fam, sizes=values, seed=seed)

    def _expect(self, count: int) -> None:
        if len(self.sizes) != count:
            raise InvalidSpec(f"{self.family} takes {count} size parameter(s), got {len(self.sizes)}")

    def validate(self) -> None:
        fam = self.family
        if fam == Family.NECKLACE:
            if len(self.lengths) < 2 or any(x < 1 for x in self.lengths):
                raise InvalidSpec("necklace needs at least two path lengths, each >= 1")
            if sum(1 for x in self.lengths if x == 1) > 1:
                raise InvalidSpec("necklace can have at most one path of length 1")
            return
        if fam == Family.COMPLETE_BIPARTITE:
            self._expect(2)
            if min(self.sizes) < 1:
                raise InvalidSpec("complete_bipartite parts must be non-empty")
            return
        self._expect(1)
        value = self.sizes[0]
        minimum = {
            Family.PATH: 1,
            Family.CYCLE: 3,
            Family.STAR: 1,
            Family.WHEEL: 4,
            Family.RANDOM_CACTUS: 1,
            Family.CLASS2PM: 1,
        }[fam]
        if value < minimum:
            raise InvalidSpec(f"{fam} parameter must be at least {minimum}, got {value}")
        if fam == Family.RANDOM_CACTUS:
            if not 0.0 <= self.cycle_probability <= 1.0:
                raise InvalidSpec("cycle probability must lie in [0, 1]")
            if self.max_cycle < 3:
                raise InvalidSpec("max cycle length must be at least 3")


@dataclass(frozen=True)
class GeneratedGraph:
    graph: Graph
    metadata: dict[str, Any] = field(default_factory=dict)


def _from_networkx(nxg: nx.Graph) -> Graph:
    edges = sorted((min(u, v), max(u, v)) for u, v in nxg.edges())
    return Graph(nxg.number_of_nodes(), tuple(edges))


def necklace_graph(lengths: Sequence[int]) -> Graph:
    """Hubs 0 and 1 joined by internally disjoint paths of the given lengths."""
    edges = []
    nxt = 2
    for length in lengths:
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph(nxt, tuple(edges))


def random_cactus(
    n: int,
    seed: Optional[int] = None,
    cycle_probability: float = Config.CACTUS_CYCLE_PROBABILITY,
    max_cycle: int = Config.CACTUS_MAX_CYCLE,
) -> Graph:
    """
    Grow a cactus on n vertices: each step attaches, at a random existing
    vertex, either a cycle of random length 3..max_cycle or a pendant edge.
    """
    rng = np.random.default_rng(Config.DEFAULT_SEED if seed is None else seed)
    edges: list[tuple[int, int]] = []
    count = 1
    while count < n:
        attach = int(rng.integers(count))
        remaining = n - count
        if remaining >= 2 and rng.random() < cycle_probability:
            length = int(rng.integers(3, min(max_cycle, remaining + 1) + 1))
            prev = attach
            for _ in range(length - 1):
                edges.append((prev, count))
                prev = count
                count += 1
            edges.append((prev, attach))
        else:
            edges.append((attach, count))
            count += 1
    return Graph(n, tuple(edges))


def generate_class2pm(k: int) -> GeneratedGraph:
    """
    Class-2± graph with Δ = 2k+1.

    H' is K_{2k,2k} on parts u_1..u_2k, v_1..v_2k plus the edges
    u_{2i-1}u_{2i} and a vertex w joined to every v_i. Two copies of H' are
    joined by a path w' - c - w''. Every vertex has degree 2k+1 except c.
    """
    if k < 1:
        raise InvalidSpec(f"class2pm needs k >= 1, got {k}")
    size = 4 * k + 1
    edges: list[tuple[int, int]] = []
    for copy in range(2):
        off = copy * size
        left = [off + i for i in range(2 * k)]
        right = [off + 2 * k + j for j in range(2 * k)]
        w = off + 4 * k
        edges.extend((u, v) for u in left for v in right)
        edges.extend((left[2 * i], left[2 * i + 1]) for i in range(k))
        edges.extend((v, w) for v in right)
    center = 2 * size
    edges.extend(((4 * k, center), (size + 4 * k, center)))
    graph = Graph(2 * size + 1, tuple(edges))
    return GeneratedGraph(graph, {"family": str(Family.CLASS2PM), "k": k, "center": center})


def generate(spec: FamilySpec) -> GeneratedGraph:
    """
    Canonical labeled instance of a family, with metadata naming the
    structure the colorers would otherwise have to recognize.

    Raises:
        InvalidSpec
    """
    spec.validate()
    fam = spec.family
    metadata: dict[str, Any] = {"family": str(fam)}

    if fam == Family.PATH:
        graph = _from_networkx(nx.path_graph(spec.sizes[0]))
        metadata["n"] = spec.sizes[0]
    elif fam == Family.CYCLE:
        graph = _from_networkx(nx.cycle_graph(spec.sizes[0]))
        metadata["n"] = spec.sizes[0]
    elif fam == Family.STAR:
        graph = _from_networkx(nx.star_graph(spec.sizes[0]))
        metadata["leaves"] = spec.sizes[0]
    elif fam == Family.WHEEL:
        # networkx puts the hub at 0
        graph = _from_networkx(nx.wheel_graph(spec.sizes[0]))
        metadata.update(n=spec.sizes[0], hub=0)
    elif fam == Family.NECKLACE:
        graph = necklace_graph(spec.lengths)
        metadata.update(lengths=list(spec.lengths), hubs=[0, 1])
    elif fam == Family.COMPLETE_BIPARTITE:
        r, t = spec.sizes
        graph = _from_networkx(nx.complete_bipartite_graph(r, t))
        metadata.update(r=r, t=t, left=list(range(r)), right=list(range(r, r + t)))
    elif fam == Family.RANDOM_CACTUS:
        seed = Config.DEFAULT_SEED if spec.seed is None else spec.seed
        graph = random_cactus(spec.sizes[0], seed, spec.cycle_probability, spec.max_cycle)
        metadata.update(n=spec.sizes[0], seed=seed)
    else:
        return generate_class2pm(spec.sizes[0])

    logger.debug(f"Generated {fam}: {graph.vertex_count} vertices, {graph.edge_count} edges")
    return GeneratedGraph(graph, metadata)


# -------------------------------------------------------------------
# Signatures
# -------------------------------------------------------------------

class SignatureMode(Enum):
    ALL_POSITIVE = "all_positive"
    ALL_NEGATIVE = "all_negative"
    RANDOM = "random"
    INDEX = "index"

    @classmethod
    def from_string(cls, value: str) -> "SignatureMode":
        normalized = value.strip().lower().replace("-", "_")
        for mode in cls:
            if mode.value == normalized:
                return mode
        raise InvalidSpec(f"unknown signature mode: {value}")

    def __str__(self):
        return self.value


def parse_signature_mode(text: str) -> tuple[SignatureMode, Optional[int]]:
    """``random``, ``all_positive``, ``all_negative`` or ``index:I``."""
    name, _, arg = text.partition(":")
    mode = SignatureMode.from_string(name)
    if mode != SignatureMode.INDEX:
        return mode, None
    try:
        return mode, int(arg)
    except ValueError:
        raise InvalidSpec(f"index signature mode needs an integer, got {text!r}")


def _random_signs(rng: np.random.Generator, m: int) -> Signature:
    bits = rng.integers(0, 2, size=m)
    return Signature(tuple(NEGATIVE if b else POSITIVE for b in bits))


def generate_signature(
    g: Graph,
    mode: SignatureMode,
    seed: Optional[int] = None,
    index: Optional[int] = None,
) -> Signature:
    """
    Raises:
        IndexOutOfRange: index mode with index outside 0..2^m - 1
    """
    m = g.edge_count
    if mode == SignatureMode.ALL_POSITIVE:
        return Signature((POSITIVE,) * m)
    if mode == SignatureMode.ALL_NEGATIVE:
        return Signature((NEGATIVE,) * m)
    if mode == SignatureMode.RANDOM:
        return _random_signs(np.random.default_rng(Config.DEFAULT_SEED if seed is None else seed), m)
    if index is None or not 0 <= index < 2 ** m:
        raise IndexOutOfRange(f"signature index {index} outside 0..2^{m} - 1")
    return Signature(tuple(NEGATIVE if (index >> j) & 1 else POSITIVE for j in range(m)))


def random_signatures(g: Graph, count: int, seed: Optional[int] = None) -> Iterator[Signature]:
    """``count`` signatures from one seeded stream."""
    rng = np.random.default_rng(Config.DEFAULT_SEED if seed is None else seed)
    for _ in range(count):
        yield _random_signs(rng, g.edge_count)
