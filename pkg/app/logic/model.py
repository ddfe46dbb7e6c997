# app/logic/model.py
"""Finite n-models: validation, Model-JSON load/save, random generation, reducts."""
import itertools
import json
import logging
import random

from pydantic import ValidationError

from app.logic.errors import ModelLoadError, WamlError
from app.models.nmodel import NModel
from app.schemas import ModelDocument
from app.utils.helpers import format_error_message

logger = logging.getLogger(__name__)


def build(arity, worlds, relation, valuation=None):
    return NModel(arity=arity, worlds=tuple(worlds), relation=frozenset(map(tuple, relation)),
                  valuation=dict(valuation or {}))


def validate(m):
    """Return the list of well-formedness violations of ``m`` (empty when ok)."""
    violations = []
    if m.arity < 1:
        violations.append(f"arity {m.arity}: arity ≥ 1 required")
    if not m.worlds:
        violations.append("worlds must be nonempty")
    seen = set()
    for w in m.worlds:
        if w in seen:
            violations.append(f"duplicate world '{w}'")
        seen.add(w)

    for t in sorted(m.relation):
        rendered = '(' + ', '.join(t) + ')'
        if len(t) != m.arity + 1:
            violations.append(f"tuple {rendered}: tuple length {len(t)} ≠ {m.arity + 1}")
        for v in t:
            if v not in seen:
                violations.append(f"tuple {rendered} mentions undeclared world '{v}'")

    for w in sorted(m.valuation):
        if w not in seen:
            violations.append(f"valuation mentions undeclared world '{w}'")
    return violations


def load(text):
    """Parse Model-JSON (bytes or str) into an NModel, validating it."""
    try:
        document = ModelDocument.model_validate_json(text)
    except ValidationError as e:
        details = [format_error_message(err) for err in e.errors()]
        raise ModelLoadError("invalid model document", details) from None

    m = build(document.arity, document.worlds, document.relation, document.valuation)
    violations = validate(m)
    if violations:
        raise ModelLoadError("model is not well-formed", violations)
    logger.debug("loaded %r", m)
    return m


def dumps(document):
    return (json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + '\n').encode('utf-8')


def save(m):
    """Canonical Model-JSON bytes: sorted worlds, letters and tuples."""
    return dumps(m.to_dict())


def canonical(m):
    document = m.to_dict()
    return build(document['arity'], document['worlds'], document['relation'], document['valuation'])


def random_model(arity, num_worlds, relation_density, alphabet, seed):
    """Deterministic random n-model over worlds w0..w{k-1}.

    Each candidate tuple is kept with probability ``relation_density``; each
    letter holds at each world with probability 1/2.
    """
    if num_worlds < 1:
        raise WamlError("num_worlds must be at least 1")
    if arity < 1:
        raise WamlError("arity ≥ 1 required")
    if not 0 <= relation_density <= 1:
        raise WamlError("relation_density must lie in [0, 1]")

    rng = random.Random(seed)
    worlds = [f'w{i}' for i in range(num_worlds)]
    relation = [t for t in itertools.product(worlds, repeat=arity + 1) if rng.random() < relation_density]
    letters = sorted(alphabet)
    valuation = {w: [p for p in letters if rng.random() < 0.5] for w in worlds}
    return build(arity, worlds, relation, valuation)


def restrict_valuation(m, alphabet):
    alphabet = frozenset(alphabet)
    return build(m.arity, m.worlds, m.relation, {w: m.valuation[w] & alphabet for w in m.worlds})


def reachable(m, w):
    """Worlds reachable from ``w`` along R^c, in model order."""
    m.require(w)
    found = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for x in frontier:
            for vector in m.successors(x):
                for y in vector:
                    if y not in found:
                        found.add(y)
                        nxt.append(y)
        frontier = nxt
    return [x for x in m.worlds if x in found]


def generated_submodel(m, w):
    keep = reachable(m, w)
    kept = set(keep)
    return build(m.arity, keep, [t for t in m.relation if t[0] in kept],
                 {x: m.valuation[x] for x in keep})
