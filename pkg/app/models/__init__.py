from app.models.formula import (
    Formula, Letter, Top, Bottom, Not, And, Or, Implies, Iff, Box, Diamond,
)
from app.models.nmodel import NModel, PointedModel
from app.models.relation import PairRelation
from app.models.fol import (
    FolFormula, Pred, Rel, Truth, Neg, Conj, Disj, Cond, Bicond, Forall, Exists,
)
from app.models.proof import Justification, ProofLine, ProofScript, InvalidLine
from app.models.bundle import CounterexampleBundle, ConditionResult, InterpolationReport
from app.models.report import Counterexample

__all__ = [
    'Formula', 'Letter', 'Top', 'Bottom', 'Not', 'And', 'Or', 'Implies', 'Iff', 'Box', 'Diamond',
    'NModel', 'PointedModel', 'PairRelation',
    'FolFormula', 'Pred', 'Rel', 'Truth', 'Neg', 'Conj', 'Disj', 'Cond', 'Bicond', 'Forall', 'Exists',
    'Justification', 'ProofLine', 'ProofScript', 'InvalidLine',
    'CounterexampleBundle', 'ConditionResult', 'InterpolationReport',
    'Counterexample',
]
