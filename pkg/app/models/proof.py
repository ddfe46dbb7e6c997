# app/models/proof.py
from dataclasses import dataclass, field

JUSTIFICATION_KINDS = ('Taut', 'KnAxiom', 'MP', 'Nec', 'RM', 'RE', 'PLFrom')


@dataclass(frozen=True)
class Justification:
    """Why a proof line holds. ``sources`` are 1-based line numbers."""
    kind: str
    sources: tuple = ()
    subst: tuple = ()

    def __post_init__(self):
        if self.kind not in JUSTIFICATION_KINDS:
            raise ValueError(f"unknown justification kind '{self.kind}'")
        object.__setattr__(self, 'sources', tuple(self.sources))
        object.__setattr__(self, 'subst', tuple(sorted(dict(self.subst).items())))

    @classmethod
    def taut(cls):
        return cls('Taut')

    @classmethod
    def kn_axiom(cls, subst):
        return cls('KnAxiom', subst=tuple(subst.items()))

    @classmethod
    def mp(cls, minor, major):
        return cls('MP', (minor, major))

    @classmethod
    def nec(cls, line):
        return cls('Nec', (line,))

    @classmethod
    def rm(cls, line):
        return cls('RM', (line,))

    @classmethod
    def re(cls, line=None):
        return cls('RE', () if line is None else (line,))

    @classmethod
    def pl_from(cls, *lines):
        return cls('PLFrom', lines)

    @property
    def substitution(self):
        return dict(self.subst)

    def to_dict(self):
        data = {'kind': self.kind}
        if self.kind == 'KnAxiom':
            data['subst'] = {key: str(value) for key, value in self.subst}
        elif self.kind != 'Taut' and (self.sources or self.kind == 'PLFrom'):
            data['from'] = list(self.sources)
        return data

    def __str__(self):
        if self.kind == 'KnAxiom':
            return 'KnAxiom'
        if not self.sources:
            return self.kind
        return f"{self.kind}({', '.join(map(str, self.sources))})"


@dataclass(frozen=True)
class ProofLine:
    formula: object
    just: Justification

    def to_dict(self):
        return {'formula': str(self.formula), 'just': self.just.to_dict()}


@dataclass(frozen=True)
class ProofScript:
    arity: int
    lines: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, 'lines', tuple(self.lines))

    @property
    def theorem(self):
        return self.lines[-1].formula if self.lines else None

    def line(self, number):
        return self.lines[number - 1]

    def to_dict(self):
        return {'arity': self.arity, 'lines': [line.to_dict() for line in self.lines]}

    def __repr__(self):
        return f'<ProofScript K{self.arity} {len(self.lines)} lines>'


@dataclass(frozen=True)
class InvalidLine:
    """First line of a script that does not validate."""
    line: int
    reason: str
    formula: str = ''

    def to_dict(self):
        return {'line': self.line, 'reason': self.reason, 'formula': self.formula}

    def __str__(self):
        return f'line {self.line}: {self.reason}'
