# app/models/nmodel.py
from dataclasses import dataclass, field

from app.logic.errors import UnknownWorldError


@dataclass(frozen=True)
class NModel:
    """Finite n-model: worlds, an (n+1)-ary relation and a valuation.

    The order of ``worlds`` fixes iteration order for every algorithm.
    Relation tuples are ``(source, v1, ..., vn)``.
    """
    arity: int
    worlds: tuple
    relation: frozenset
    valuation: dict = field(hash=False)
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _successors: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, 'worlds', tuple(self.worlds))
        object.__setattr__(self, 'relation', frozenset(tuple(t) for t in self.relation))
        object.__setattr__(
            self, 'valuation',
            {w: frozenset(self.valuation.get(w, ())) for w in self.worlds}
            | {w: frozenset(v) for w, v in self.valuation.items() if w not in self.worlds},
        )
        index = {w: i for i, w in enumerate(self.worlds)}
        object.__setattr__(self, '_index', index)

        successors = {w: [] for w in self.worlds}
        for t in self.relation:
            if len(t) == self.arity + 1 and t[0] in successors and all(v in index for v in t):
                successors[t[0]].append(t[1:])
        for w in successors:
            successors[w] = tuple(sorted(successors[w], key=lambda vec: [index[v] for v in vec]))
        object.__setattr__(self, '_successors', successors)

    def __contains__(self, world):
        return world in self._index

    def position(self, world):
        try:
            return self._index[world]
        except KeyError:
            raise UnknownWorldError(world) from None

    def require(self, world):
        if world not in self._index:
            raise UnknownWorldError(world)
        return world

    def successors(self, world):
        """Successor n-vectors of ``world`` in world order."""
        self.require(world)
        return self._successors[world]

    def label(self, world):
        self.require(world)
        return self.valuation[world]

    def to_dict(self):
        return {
            'arity': self.arity,
            'worlds': sorted(self.worlds),
            'relation': sorted(list(t) for t in self.relation),
            'valuation': {w: sorted(self.valuation.get(w, ())) for w in sorted(self.worlds)},
        }

    def __repr__(self):
        return f'<NModel arity={self.arity} worlds={len(self.worlds)} tuples={len(self.relation)}>'


@dataclass(frozen=True)
class PointedModel:
    model: NModel
    point: str

    def __post_init__(self):
        self.model.require(self.point)

    def to_dict(self):
        return {'model': self.model.to_dict(), 'point': self.point}
