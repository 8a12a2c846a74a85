"""Error hierarchy shared by services, use cases and both front ends."""

from fastapi import status


class ToricError(Exception):
    """Base class for all toricdef errors."""

    code = "toric_error"
    exit_code = 1
    status_code = status.HTTP_500_INTERNAL_SERVER_ERROR

    def __init__(self, message: str, **context: object):
        super().__init__(message)
        self.message = message
        self.context = context

    def to_dict(self) -> dict[str, object]:
        """Serializable form used by the CLI and the API."""
        return {"error": self.code, "message": self.message}


class InputError(ToricError):
    """Invalid user input; exit code 2."""

    code = "input_error"
    exit_code = 2
    status_code = status.HTTP_400_BAD_REQUEST


class ComputationError(ToricError):
    """Internal consistency check failed; exit code 1."""

    code = "computation_error"


class EmptyInputError(InputError):
    code = "empty_input"


class NotPointedError(InputError):
    code = "not_pointed"


class NotFullDimensionalError(InputError):
    code = "not_full_dimensional"


class DimensionMismatchError(InputError):
    code = "dimension_mismatch"


class RankCapExceededError(InputError):
    code = "rank_cap_exceeded"


class PolygonError(InputError):
    code = "invalid_polygon"


class SchemaError(InputError):
    code = "schema_error"


class SNotInDualConeError(InputError):
    code = "s_not_in_dual_cone"


class NotSmoothCodim2Error(InputError):
    code = "not_smooth_in_codim_2"


class ScanBoxTooLargeError(InputError):
    code = "scan_box_too_large"


class UnsupportedDegreeError(InputError):
    code = "unsupported_degree"


class NotInSummandSpaceError(InputError):
    code = "not_in_summand_space"


class NotSurjectiveError(InputError):
    code = "not_surjective"


class CocycleViolationError(ComputationError):
    code = "cocycle_violation"


class CorrectionNotFoundError(ComputationError):
    code = "correction_not_found"


class NoHeightOneElementError(ComputationError):
    code = "no_height_one_element"


class IsoCheckFailedError(ComputationError):
    code = "iso_check_failed"


class SectionError(ComputationError):
    code = "section_error"
