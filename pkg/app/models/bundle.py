# app/models/bundle.py
from dataclasses import dataclass, field


@dataclass(frozen=True, eq=False)
class CounterexampleBundle:
    """Two pointed n-models, two formulas, a bisimulation over their shared
    letters and a refutation of phi & psi."""
    n: int
    model_m: object
    model_n: object
    phi: object
    psi: object
    z: object
    refutation: object

    def to_dict(self):
        return {
            'n': self.n,
            'M': self.model_m.to_dict(),
            'N': self.model_n.to_dict(),
            'phi': str(self.phi),
            'psi': str(self.psi),
            'z': self.z.to_dict(),
            'refutation': self.refutation.to_dict(),
        }

    def __repr__(self):
        return f'<CounterexampleBundle n={self.n}>'


@dataclass(frozen=True)
class ConditionResult:
    name: str
    passed: bool
    detail: str = ''
    evidence: dict = field(default_factory=dict)

    def to_dict(self):
        return {'name': self.name, 'passed': self.passed, 'detail': self.detail, 'evidence': self.evidence}

    def __str__(self):
        verdict = 'PASS' if self.passed else 'FAIL'
        return f'{verdict} {self.name}' + (f': {self.detail}' if self.detail else '')


@dataclass(frozen=True)
class InterpolationReport:
    n: int
    conditions: tuple
    notes: tuple = ()

    @property
    def passed(self):
        return all(c.passed for c in self.conditions)

    def to_dict(self):
        return {
            'n': self.n,
            'conditions': [c.to_dict() for c in self.conditions],
            'notes': list(self.notes),
            'verdict': 'pass' if self.passed else 'fail',
        }

    def lines(self):
        yield f'interpolation counterexample for K{self.n}'
        for condition in self.conditions:
            yield f'  {condition}'
        for note in self.notes:
            yield f'  note: {note}'
        yield f"verdict: {'PASS' if self.passed else 'FAIL'}"
