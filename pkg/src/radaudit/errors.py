"""Exception hierarchy shared across the toolkit.

The CLI maps these onto exit codes: input/validation problems exit 2,
undefined-metric hard failures exit 3.
"""


class RadauditError(Exception):
    """Base class for all toolkit errors."""


class InputError(RadauditError):
    """Malformed or inconsistent input data (files, tables, arguments)."""


class UndefinedMetricError(RadauditError):
    """A metric is undefined on the given data (e.g. single-class labels).

    Raised instead of silently returning a default so that undefined
    values can never corrupt macro averages.
    """


class DegenerateStatisticError(RadauditError):
    """A resampling procedure failed on the majority of resamples."""


class TokenBudgetError(RadauditError):
    """Prompt still exceeds the token budget after one summarization pass."""

    def __init__(self, message, original_tokens, summarized_tokens, limit):
        super().__init__(message)
        self.original_tokens = original_tokens
        self.summarized_tokens = summarized_tokens
        self.limit = limit


class BackendError(RadauditError):
    """A pluggable generation/audit backend failed on a sample."""


class DivergenceError(RadauditError):
    """Probe training produced a non-finite loss."""

    def __init__(self, message, epoch):
        super().__init__(message)
        self.epoch = epoch
