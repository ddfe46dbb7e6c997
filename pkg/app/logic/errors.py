# app/logic/errors.py


class WamlError(Exception):
    """Base class for every failure the workbench reports as an error."""

    def to_dict(self):
        return {"message": str(self), "details": []}


class FormulaSyntaxError(WamlError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ModelLoadError(WamlError):
    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = list(details or [])

    def to_dict(self):
        return {"message": str(self), "details": self.details}


class UnknownWorldError(WamlError):
    def __init__(self, world):
        super().__init__(f"unknown world '{world}'")
        self.world = world


class ArityMismatchError(WamlError):
    def __init__(self, left, right):
        super().__init__(f"arity mismatch: {left} != {right}")
        self.left = left
        self.right = right


class BudgetExceededError(WamlError):
    def __init__(self, what, budget):
        super().__init__(f"{what} exceeded budget of {budget}")
        self.what = what
        self.budget = budget


class SubstitutionError(WamlError):
    pass


class ProofFormatError(ModelLoadError):
    pass


class TptpNameError(WamlError):
    pass


class UnassignedVariableError(WamlError):
    def __init__(self, variable):
        super().__init__(f"free variable '{variable}' has no assignment")
        self.variable = variable
