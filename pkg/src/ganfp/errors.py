"""Exception types shared across the toolkit."""


class ConfigurationError(ValueError):
    """A config object is internally inconsistent or out of supported range."""


class ShapeError(ValueError):
    """An image or tensor does not have the shape a model was built for."""


class TrainingError(RuntimeError):
    """Training diverged or could not proceed."""

    def __init__(self, message, epoch=None):
        super().__init__(message)
        self.epoch = epoch


class AugmentationError(RuntimeError):
    """A registered transform failed on one image of an augmented set."""

    def __init__(self, message, pair_id=None, transform_id=None):
        super().__init__(message)
        self.pair_id = pair_id
        self.transform_id = transform_id


class PartialBundleError(RuntimeError):
    """Fingerprint generation exhausted the dataset before collecting
    the requested number of accepted pairs.  Carries what was collected."""

    def __init__(self, message, pairs):
        super().__init__(message)
        self.pairs = pairs


class VerificationError(RuntimeError):
    """Verification could not produce a decision (e.g. every oracle
    query failed)."""


class OracleError(RuntimeError):
    """A single oracle query failed (transport or contract violation)."""
