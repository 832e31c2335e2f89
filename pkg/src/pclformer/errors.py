"""Exception types shared across the package."""


class PCLFormerError(Exception):
    """Base class for all package-specific errors."""


class ShapeError(PCLFormerError, ValueError):
    """Operand shapes or axes are incompatible with an operation."""


class ParameterError(PCLFormerError, ValueError):
    """A numeric argument is outside its valid range."""


class ConfigError(PCLFormerError, ValueError):
    """A configuration object violates its invariants."""


class ContractError(PCLFormerError, ValueError):
    """An operation was called in a way that breaks its contract."""


class DataError(PCLFormerError, ValueError):
    """Input data (videos, annotations, files) is malformed or empty."""


class GenerationError(PCLFormerError, RuntimeError):
    """Synthetic data generation cannot satisfy its constraints."""


class TrainingError(PCLFormerError, RuntimeError):
    """Training cannot proceed (degenerate dataset, incompatible inputs)."""


class DivergenceError(TrainingError):
    """Training produced a non-finite loss."""

    def __init__(self, epoch: int, message: str = ""):
        self.epoch = epoch
        super().__init__(message or f"non-finite loss at epoch {epoch}")


class CheckpointError(PCLFormerError, RuntimeError):
    """A checkpoint file is missing, malformed, or incompatible."""


class EvalError(PCLFormerError, ValueError):
    """Evaluation inputs are unusable (e.g. no ground-truth instances)."""
