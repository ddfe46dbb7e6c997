# app/logic/unravel.py
"""Bounded n-ary unraveling of pointed models and the projection map r."""
from dataclasses import dataclass
import itertools
import logging
from urllib.parse import quote

import networkx as nx

from app.logic.errors import ArityMismatchError, BudgetExceededError, WamlError
from app.logic.model import build
from app.logic.semantics import check
from app.logic.syntax import modal_depth
from app.models.report import Counterexample

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 20000
DEFAULT_TUPLE_BUDGET = 500000


def _escape(world):
    return quote(world, safe='')


def step_id(vector, index):
    """One path step ``#v1,...,vn:i`` with percent-escaped world ids."""
    return '#' + ','.join(_escape(v) for v in vector) + f':{index}'


@dataclass(frozen=True)
class UnravelResult:
    """A bounded unraveling M_w|_depth with its root, projection map and tree skeleton."""
    model: object
    root: str
    rmap: dict
    levels: dict
    parents: dict
    depth: int

    def level(self, node):
        return self.levels[node]

    def frontier(self):
        return [node for node in self.model.worlds if self.levels[node] == self.depth]

    def skeleton(self):
        """The binary unraveling: an edge from every node to each one-step extension."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.model.worlds)
        graph.add_edges_from((parent, node) for node, parent in self.parents.items() if parent is not None)
        return graph

    def to_dict(self):
        return {
            'root': self.root,
            'depth': self.depth,
            'model': self.model.to_dict(),
            'rmap': {node: self.rmap[node] for node in sorted(self.rmap)},
        }


def unravel(m, w, depth, node_budget=DEFAULT_NODE_BUDGET, tuple_budget=DEFAULT_TUPLE_BUDGET):
    """Unravel (m, w) up to level ``depth``.

    Nodes are paths of (vector, index) steps. The root is the world id itself
    (the constant vector with index 1); a child appends ``#v1,...,vn:i`` with
    every world id percent-escaped. A tuple (s0, s1, ..., sn) is in the new relation iff every s_i is a child of
    s0 and (r(s0), r(s1), ..., r(sn)) is in the original relation.
    """
    m.require(w)
    if depth < 0:
        raise WamlError("depth must be non-negative")

    worlds = [w]
    rmap = {w: w}
    levels = {w: 0}
    parents = {w: None}
    relation = []
    frontier = [w]

    for level in range(depth):
        next_frontier = []
        for node in frontier:
            source = rmap[node]
            by_world = {}
            for vector in m.successors(source):
                for index, target in enumerate(vector, start=1):
                    child = node + step_id(vector, index)
                    rmap[child] = target
                    levels[child] = level + 1
                    parents[child] = node
                    worlds.append(child)
                    next_frontier.append(child)
                    by_world.setdefault(target, []).append(child)
            if len(worlds) > node_budget:
                raise BudgetExceededError("unraveling node count", node_budget)

            for vector in m.successors(source):
                for children in itertools.product(*(by_world[v] for v in vector)):
                    relation.append((node,) + children)
            if len(relation) > tuple_budget:
                raise BudgetExceededError("unraveling tuple count", tuple_budget)
        logger.debug("unraveling level %d has %d nodes", level + 1, len(next_frontier))
        frontier = next_frontier

    unraveled = build(m.arity, worlds, relation, {node: m.valuation[rmap[node]] for node in worlds})
    return UnravelResult(unraveled, w, rmap, levels, parents, depth)


def check_pmorphism(source, target, f):
    """Return None when ``f`` is a p-morphism from source to target, else the first Counterexample."""
    if source.arity != target.arity:
        raise ArityMismatchError(source.arity, target.arity)
    for s in source.worlds:
        if s not in f:
            raise WamlError(f"map is undefined on '{s}'")
        target.require(f[s])

    for s in source.worlds:
        image = f[s]
        if source.valuation[s] != target.valuation[image]:
            return Counterexample('valuation', (s,), None,
                                  f"{s} and its image {image} have different valuations")

        for vector in source.successors(s):
            mapped = (image,) + tuple(f[x] for x in vector)
            if mapped not in target.relation:
                return Counterexample('forth', (s,), (s,) + vector,
                                      f"image ({', '.join(mapped)}) of a tuple at {s} is not in the target")

        lifted = {tuple(f[x] for x in vector) for vector in source.successors(s)}
        for vector in target.successors(image):
            if vector not in lifted:
                return Counterexample('back', (s,), (image,) + vector,
                                      f"target tuple ({image}, {', '.join(vector)}) has no preimage at {s}")
    return None


@dataclass(frozen=True)
class LocalityReport:
    formula: object
    point_truth: bool
    rows: tuple
    least_depth: int | None

    def to_dict(self):
        return {
            'label': 'EXPERIMENT',
            'formula': str(self.formula),
            'modal_depth': modal_depth(self.formula),
            'point_truth': self.point_truth,
            'rows': [{'depth': d, 'root_truth': t, 'agrees': t == self.point_truth} for d, t in self.rows],
            'least_agreeing_depth': self.least_depth,
        }


def locality_sweep(m, w, f, max_depth, node_budget=DEFAULT_NODE_BUDGET):
    """Evaluate f at the root of each bounded unraveling l = 0..max_depth.

    Reports the least l from which the root agrees with (m, w) up to max_depth.
    Agreement is guaranteed once l reaches the modal depth of f; anything
    below that is observation only.
    """
    point_truth = check(m, w, f)
    rows = []
    for depth in range(max_depth + 1):
        result = unravel(m, w, depth, node_budget=node_budget)
        rows.append((depth, check(result.model, result.root, f)))

    least = None
    for depth, truth in reversed(rows):
        if truth != point_truth:
            break
        least = depth
    return LocalityReport(f, point_truth, tuple(rows), least)
