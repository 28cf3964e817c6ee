import pytest

from flatmodels.core.errors import (
    CapExceededError,
    CensusInconsistencyError,
    ConfigError,
    CrossCheckError,
    FieldDomainError,
    FlatModelsError,
    FormulaCheckError,
    InvariantError,
    SpecMismatchError,
    ValidationError,
    get_exit_code,
)


@pytest.mark.parametrize(
    "exc,code",
    [
        (FlatModelsError("x"), 1),
        (ValidationError("x"), 1),
        (ConfigError("x"), 1),
        (SpecMismatchError("x"), 1),
        (CapExceededError("x"), 1),
        (FieldDomainError("x"), 1),
        (InvariantError("x"), 2),
        (CensusInconsistencyError("x"), 2),
        (FormulaCheckError("x"), 2),
        (CrossCheckError("x", s=0, t=1, v="u^-1"), 2),
    ],
)
def test_exit_codes(exc, code):
    assert get_exit_code(exc) == code


def test_validation_error_names_argument():
    err = ValidationError("must be a prime, got 4", argument="p")
    assert err.message == "p: must be a prime, got 4"
    assert err.argument == "p"
    # not repeated when the message already names it
    assert ValidationError("p must be odd", argument="p").message == "p must be odd"


def test_cross_check_error_carries_location():
    err = CrossCheckError("conditions disagree", s=1, t=2, v="2*u^-1")
    assert (err.s, err.t, err.v) == (1, 2, "2*u^-1")
    assert "s=1, t=2" in err.message


def test_field_domain_error_is_zero_division():
    assert issubclass(FieldDomainError, ZeroDivisionError)
