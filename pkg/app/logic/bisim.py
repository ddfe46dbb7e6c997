# app/logic/bisim.py
"""wa^n-bisimulations: checking, greatest fixpoint, k-stages, distinguishing formulas, distance."""
from dataclasses import dataclass, field
import logging
import math

import networkx as nx
from pydantic import ValidationError

from app.logic.errors import ArityMismatchError, ModelLoadError, UnknownWorldError, WamlError
from app.logic.model import dumps
from app.logic.semantics import check
from app.logic.syntax import conjoin, disjoin, simplify
from app.models.formula import Diamond, Letter, Not
from app.models.relation import PairRelation
from app.models.report import Counterexample
from app.schemas import RelationDocument
from app.utils.helpers import format_error_message

logger = logging.getLogger(__name__)


def _require_same_arity(left, right):
    if left.arity != right.arity:
        raise ArityMismatchError(left.arity, right.arity)


def _agree(left, a, right, b, alphabet):
    return left.valuation[a] & alphabet == right.valuation[b] & alphabet


def _covered(sources, target, related, flip=False):
    if flip:
        return any((target, s) in related for s in sources)
    return any((s, target) in related for s in sources)


def _forth_failure(left, right, a, b, related):
    """A successor vector of ``a`` that no successor vector of ``b`` answers, else None."""
    for xs in left.successors(a):
        if not any(all(_covered(xs, y, related) for y in ys) for ys in right.successors(b)):
            return xs
    return None


def _back_failure(left, right, a, b, related):
    for ys in right.successors(b):
        if not any(all(_covered(ys, x, related, flip=True) for x in xs) for xs in left.successors(a)):
            return ys
    return None


def check_bisim(z):
    """Return None when ``z`` is a wa^n-bisimulation, else the first Counterexample."""
    _require_same_arity(z.left, z.right)
    for a, b in z.pairs:
        z.left.require(a)
        z.right.require(b)
    if not z.pairs:
        return Counterexample('nonempty', (), None, 'a bisimulation must be nonempty')

    alphabet = frozenset(z.alphabet)
    for a, b in z.sorted_pairs():
        if not _agree(z.left, a, z.right, b, alphabet):
            difference = sorted((z.left.valuation[a] ^ z.right.valuation[b]) & alphabet)
            return Counterexample('inv', (a, b), None,
                                  f"({a}, {b}) disagree on {', '.join(difference)}")
        xs = _forth_failure(z.left, z.right, a, b, z.pairs)
        if xs is not None:
            return Counterexample('forth', (a, b), (a,) + xs,
                                  f"({a}, {b}): tuple ({a}, {', '.join(xs)}) has no answer from {b}")
        ys = _back_failure(z.left, z.right, a, b, z.pairs)
        if ys is not None:
            return Counterexample('back', (a, b), (b,) + ys,
                                  f"({a}, {b}): tuple ({b}, {', '.join(ys)}) has no answer from {a}")
    return None


@dataclass
class Refinement:
    """The decreasing chain stage 0 ⊇ stage 1 ⊇ ... of k-wa^n-bisimilarity.

    ``deleted`` maps each pair outside the fixpoint to (stage, condition,
    offending vector); a pair deleted at stage 0 failed on the valuation.
    """
    left: object
    right: object
    alphabet: frozenset
    stages: list = field(default_factory=list)
    deleted: dict = field(default_factory=dict)

    @property
    def greatest(self):
        return self.stages[-1]

    def stage(self, k):
        return self.stages[min(k, len(self.stages) - 1)]

    def relation(self, pairs):
        return PairRelation(self.left, self.right, pairs, self.alphabet)


def refinement_stages(left, right, alphabet):
    _require_same_arity(left, right)
    alphabet = frozenset(alphabet)
    refinement = Refinement(left, right, alphabet)

    current = set()
    for a in left.worlds:
        for b in right.worlds:
            if _agree(left, a, right, b, alphabet):
                current.add((a, b))
            else:
                refinement.deleted[(a, b)] = (0, 'inv', None)
    refinement.stages.append(frozenset(current))

    stage = 0
    while True:
        stage += 1
        previous = refinement.stages[-1]
        survivors = set()
        # Pairs are visited in world order so deletions are recorded deterministically.
        for a, b in sorted(previous, key=lambda p: (left.position(p[0]), right.position(p[1]))):
            xs = _forth_failure(left, right, a, b, previous)
            if xs is not None:
                refinement.deleted[(a, b)] = (stage, 'forth', xs)
                continue
            ys = _back_failure(left, right, a, b, previous)
            if ys is not None:
                refinement.deleted[(a, b)] = (stage, 'back', ys)
                continue
            survivors.add((a, b))
        logger.debug("refinement stage %d keeps %d of %d pairs", stage, len(survivors), len(previous))
        if survivors == previous:
            return refinement
        refinement.stages.append(frozenset(survivors))


def greatest_bisim(left, right, alphabet):
    """Union of all wa^n-bisimulations between the models w.r.t. ``alphabet`` (may be empty)."""
    refinement = refinement_stages(left, right, alphabet)
    return refinement.relation(refinement.greatest)


def k_bisim(left, right, alphabet, k):
    refinement = refinement_stages(left, right, alphabet)
    return refinement.relation(refinement.stage(k))


def bisimilar(left, w, right, v, alphabet):
    left.require(w)
    right.require(v)
    return (w, v) in greatest_bisim(left, right, alphabet)


class _Certificates:
    """Builds formulas true at a left world and false at a right world from stored deletions."""

    def __init__(self, refinement):
        self.refinement = refinement
        self.left = refinement.left
        self.right = refinement.right
        self._memo = {}

    def formula(self, a, b):
        pair = (a, b)
        if pair not in self._memo:
            self._memo[pair] = self._build(a, b)
        return self._memo[pair]

    def _build(self, a, b):
        stage, condition, vector = self.refinement.deleted[(a, b)]
        alphabet = self.refinement.alphabet
        if condition == 'inv':
            only_left = sorted((self.left.valuation[a] - self.right.valuation[b]) & alphabet)
            if only_left:
                return Letter(only_left[0])
            only_right = sorted((self.right.valuation[b] - self.left.valuation[a]) & alphabet)
            return Not(Letter(only_right[0]))

        related = self.refinement.stages[stage - 1]
        if condition == 'forth':
            xs = vector
            witnesses = []
            for ys in self.right.successors(b):
                u = next(y for y in ys if not _covered(xs, y, related))
                if u not in witnesses:
                    witnesses.append(u)
            branches = [conjoin(self.formula(x, u) for u in witnesses) for x in dict.fromkeys(xs)]
            return Diamond(disjoin(branches))

        ys = vector
        witnesses = []
        for xs in self.left.successors(a):
            u = next(x for x in xs if not _covered(ys, x, related, flip=True))
            if u not in witnesses:
                witnesses.append(u)
        branches = [conjoin(Not(self.formula(u, y)) for u in witnesses) for y in dict.fromkeys(ys)]
        return Not(Diamond(disjoin(branches)))


def distinguishing_formula(left, w, right, v, alphabet):
    """A formula over ``alphabet`` true at (left, w) and false at (right, v).

    Returns None exactly when the worlds are bisimilar. The modal depth of
    the result is at most the refinement stage at which the pair was deleted.
    """
    left.require(w)
    right.require(v)
    refinement = refinement_stages(left, right, alphabet)
    if (w, v) in refinement.greatest:
        return None

    raw = _Certificates(refinement).formula(w, v)
    if not (check(left, w, raw) and not check(right, v, raw)):
        raise WamlError(f"extracted formula {raw} does not distinguish {w} from {v}")
    simplified = simplify(raw)
    if check(left, w, simplified) and not check(right, v, simplified):
        return simplified
    logger.warning("simplification broke distinguishing formula %s; keeping the raw form", raw)
    return raw


def _connection_graph(m):
    graph = nx.Graph()
    graph.add_nodes_from(m.worlds)
    for t in m.relation:
        for y in t[1:]:
            graph.add_edge(t[0], y)
    return graph


def distance(m, s, t):
    """Length of the shortest undirected R^c path from s to t; math.inf when disconnected."""
    m.require(s)
    m.require(t)
    try:
        return nx.shortest_path_length(_connection_graph(m), s, t)
    except nx.NetworkXNoPath:
        return math.inf


def load_relation(text, left, right, alphabet=None):
    """Parse Relation-JSON against the two models; ``alphabet`` overrides the document's."""
    try:
        document = RelationDocument.model_validate_json(text)
    except ValidationError as e:
        details = [format_error_message(err) for err in e.errors()]
        raise ModelLoadError("invalid relation document", details) from None

    if alphabet is None:
        alphabet = document.alphabet or ()
    pairs = [tuple(pair) for pair in document.pairs]
    for a, b in pairs:
        if a not in left:
            raise UnknownWorldError(a)
        if b not in right:
            raise UnknownWorldError(b)
    return PairRelation(left, right, frozenset(pairs), frozenset(alphabet))


def save_relation(z):
    return dumps(z.to_dict())
