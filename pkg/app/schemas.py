# app/schemas.py
from typing import Dict, List, Literal, Optional, Union, Annotated

from pydantic import BaseModel, Field, StrictInt, StrictStr, field_validator

from app.models.formula import is_letter_id


def _check_letters(values):
    for value in values:
        if not is_letter_id(value):
            raise ValueError(f"'{value}' is not a letter id")
    return values


class ModelDocument(BaseModel):
    arity: StrictInt
    worlds: List[StrictStr]
    relation: List[List[StrictStr]] = Field(default_factory=list)
    valuation: Dict[StrictStr, List[StrictStr]] = Field(default_factory=dict)

    @field_validator('arity')
    @classmethod
    def validate_arity(cls, v):
        if v < 1:
            raise ValueError('arity ≥ 1 required')
        return v

    @field_validator('worlds')
    @classmethod
    def validate_worlds(cls, v):
        if not v:
            raise ValueError('worlds must be nonempty')
        if any(not w for w in v):
            raise ValueError('world ids must be nonempty')
        return v

    @field_validator('valuation')
    @classmethod
    def validate_valuation(cls, v):
        for letters in v.values():
            _check_letters(letters)
        return v

    model_config = {
        "extra": "forbid",
    }


class RelationDocument(BaseModel):
    pairs: List[List[StrictStr]]
    alphabet: Optional[List[StrictStr]] = None

    @field_validator('pairs')
    @classmethod
    def validate_pairs(cls, v):
        for pair in v:
            if len(pair) != 2:
                raise ValueError(f'pair {pair} must have exactly two entries')
        return v

    @field_validator('alphabet')
    @classmethod
    def validate_alphabet(cls, v):
        if v is None:
            return None
        return _check_letters(v)

    model_config = {
        "extra": "forbid",
    }


class TautJust(BaseModel):
    kind: Literal['Taut']
    model_config = {"extra": "forbid"}


class KnAxiomJust(BaseModel):
    kind: Literal['KnAxiom']
    subst: Dict[StrictStr, StrictStr]
    model_config = {"extra": "forbid"}


class MPJust(BaseModel):
    kind: Literal['MP']
    from_: List[StrictInt] = Field(alias='from', min_length=2, max_length=2)
    model_config = {"extra": "forbid", "populate_by_name": True}


class NecJust(BaseModel):
    kind: Literal['Nec']
    from_: List[StrictInt] = Field(alias='from', min_length=1, max_length=1)
    model_config = {"extra": "forbid", "populate_by_name": True}


class RMJust(BaseModel):
    kind: Literal['RM']
    from_: List[StrictInt] = Field(alias='from', min_length=1, max_length=1)
    model_config = {"extra": "forbid", "populate_by_name": True}


class REJust(BaseModel):
    kind: Literal['RE']
    from_: List[StrictInt] = Field(default_factory=list, alias='from', max_length=1)
    model_config = {"extra": "forbid", "populate_by_name": True}


class PLFromJust(BaseModel):
    kind: Literal['PLFrom']
    from_: List[StrictInt] = Field(alias='from')
    model_config = {"extra": "forbid", "populate_by_name": True}


JustDocument = Annotated[
    Union[TautJust, KnAxiomJust, MPJust, NecJust, RMJust, REJust, PLFromJust],
    Field(discriminator='kind'),
]


class ProofLineDocument(BaseModel):
    formula: StrictStr
    just: JustDocument
    model_config = {"extra": "forbid"}


class ProofDocument(BaseModel):
    arity: StrictInt = Field(ge=1)
    lines: List[ProofLineDocument] = Field(min_length=1)
    model_config = {"extra": "forbid"}


class RandomModelParams(BaseModel):
    arity: StrictInt = Field(ge=1, le=6)
    worlds: StrictInt = Field(ge=1, le=12)
    density: float = Field(ge=0, le=1)
    letters: List[StrictStr] = Field(default_factory=list)
    seed: StrictInt = 0

    @field_validator('letters')
    @classmethod
    def validate_letters(cls, v):
        return _check_letters(v)

    model_config = {
        "extra": "forbid",
        "validate_assignment": True
    }


class InterpParams(BaseModel):
    n: StrictInt = Field(ge=2)
    sat_bound: StrictInt = Field(ge=1)
    model_config = {"extra": "forbid"}
