# app/models/relation.py
from dataclasses import dataclass


@dataclass(frozen=True, eq=False)
class PairRelation:
    """A set of (left world, right world) pairs between two n-models, relative to an alphabet."""
    left: object
    right: object
    pairs: frozenset
    alphabet: frozenset

    def __post_init__(self):
        object.__setattr__(self, 'pairs', frozenset(tuple(p) for p in self.pairs))
        object.__setattr__(self, 'alphabet', frozenset(self.alphabet))

    def __contains__(self, pair):
        return tuple(pair) in self.pairs

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.sorted_pairs())

    def __bool__(self):
        return bool(self.pairs)

    def sorted_pairs(self):
        return sorted(
            self.pairs,
            key=lambda p: (self.left.position(p[0]), self.right.position(p[1])),
        )

    def issuperset(self, other):
        return self.pairs >= other.pairs

    def inverse(self):
        return PairRelation(self.right, self.left, frozenset((b, a) for a, b in self.pairs), self.alphabet)

    def with_pairs(self, pairs):
        return PairRelation(self.left, self.right, frozenset(pairs), self.alphabet)

    def to_dict(self):
        return {
            'pairs': [list(p) for p in self.sorted_pairs()],
            'alphabet': sorted(self.alphabet),
        }

    def __repr__(self):
        return f'<PairRelation pairs={len(self.pairs)} alphabet={sorted(self.alphabet)}>'
