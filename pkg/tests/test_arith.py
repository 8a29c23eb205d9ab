from fractions import Fraction

import pytest

from qabel.arith import builtin_names, get_function, load_function_table, residue_indicator, tabulated
from qabel.errors import FunctionTableError, TabulationError


def test_builtin_values():
    assert get_function("mobius").values(10) == (0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1)
    assert get_function("liouville").values(8) == (0, 1, -1, -1, 1, -1, 1, -1, -1)
    assert get_function("divisor_count").values(6) == (0, 1, 2, 2, 3, 2, 4)
    assert get_function("phi_ratio").values(6) == (0, 1, Fraction(1, 2), Fraction(2, 3), Fraction(1, 2),
                                                   Fraction(4, 5), Fraction(1, 3))
    assert get_function("even_indicator").values(5) == (0, 0, 1, 0, 1, 0)
    assert get_function("residue_1_3").values(7) == (0, 1, 0, 0, 1, 0, 0, 1)


def test_f0_is_zero_for_every_builtin():
    for name in builtin_names():
        f = get_function("residue_0_2" if name == "residue_R_M" else name)
        assert f.values(3)[0] == 0


def test_unknown_names_list_valid_ones():
    with pytest.raises(KeyError, match="valid:.*mobius"):
        get_function("nosuch")
    with pytest.raises(ValueError):
        residue_indicator(3, 3)


def test_tabulated_gap(tmp_path):
    f = tabulated("t", [1, 2, 3])
    assert f(3) == 3
    with pytest.raises(TabulationError):
        f.values(4)


def _write(tmp_path, text):
    p = tmp_path / "f.csv"
    p.write_text(text)
    return p


def test_csv_loading(tmp_path):
    f = load_function_table(_write(tmp_path, "n,value\n1,1/2\n2,-3\n3,0.25\n"))
    assert f.values(3) == (0, Fraction(1, 2), -3, Fraction(1, 4))
    assert f.name == "f"


@pytest.mark.parametrize(
    "text, line, message",
    [
        ("x,y\n1,1\n", 1, "header"),
        ("n,value\n1,1\n3,1\n", 3, "gap"),
        ("n,value\n1,abc\n", 2, "unparsable"),
        ("n,value\n1,1,2\n", 2, "fields"),
        ("n,value\n1,1/0\n", 2, "zero denominator"),
        ("n,value\n", 2, "no data"),
    ],
)
def test_csv_errors_carry_line_numbers(tmp_path, text, line, message):
    with pytest.raises(FunctionTableError, match=message) as info:
        load_function_table(_write(tmp_path, text))
    assert info.value.line == line
