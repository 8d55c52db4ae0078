import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import small_regions
from lozenge.cli import main
from lozenge.expr import (
    DHex,
    ExprSyntaxError,
    FileRef,
    Half,
    Hex,
    Tube,
    Tubey,
    build,
    parse_region_expr,
    print_region_expr,
    region_from_text,
)
from lozenge.fileio import RegionFileError, format_region, load_region, parse_region, save_region
from lozenge.lattice import Down, Region, Up, lozenge
from lozenge.oracle import enumerate_tilings
from lozenge.regions import V, dented_hexagon, DentSpec, semiregular_hexagon
from lozenge.svg import render_svg


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# expressions

def test_parse_examples():
    assert parse_region_expr("hex(6,4,5)") == Hex(6, 4, 5)
    assert parse_region_expr("dhex(4,3,3,4;[3,5];[3,5])") == DHex(4, 3, 3, 4, (3, 5), (3, 5))
    assert parse_region_expr("V(2,3;[3,5])") == Half("V", 2, 3, (3, 5))
    assert parse_region_expr(" tubey( V(0,1;[]) ; 0,-1 ; 2;5;1 ) ") == Tubey(Half("V", 0, 1, ()), 0, -1, 2, 5, True)
    assert region_from_text("V(2,3;[3,5])") == V(2, 3, (3, 5))
    assert region_from_text("dhex(4,3,3,4;[3,5];[3,5])") == dented_hexagon(4, 3, 3, 4, DentSpec((3, 5), (3, 5)))


@pytest.mark.parametrize("text,offset", [
    ("hex(1,2)", 7),
    ("hex(1,2,3) x", 11),
    ("V(1,2;[3,3])", 9),
    ("Q(1)", 0),
    ("tube(1,-2)", 7),
    ("tubey(hex(1,1,1);0,0;1;3;2)", 25),
    ("hex(é,1,1)", 4),
    ("é hex(1,1,1)", 0),
    ("hexé(1,1,1)", 3),
])
def test_syntax_errors_carry_byte_offsets(text, offset):
    with pytest.raises(ExprSyntaxError) as err:
        parse_region_expr(text)
    assert err.value.offset == offset


def test_offsets_count_utf8_bytes():
    with pytest.raises(ExprSyntaxError) as err:
        parse_region_expr("hex(1,1,1)é")
    assert err.value.offset == len("hex(1,1,1)".encode())
    with pytest.raises(ExprSyntaxError) as err:
        parse_region_expr("ééhex(1,1,1)")
    assert err.value.offset == 0


nat = st.integers(0, 9)
inc = st.lists(st.integers(1, 12), unique=True, max_size=4).map(lambda xs: tuple(sorted(xs)))
leaf = st.one_of(
    st.builds(Hex, nat, nat, nat),
    st.builds(DHex, nat, nat, nat, nat, inc, inc),
    st.builds(Half, st.sampled_from(["V", "Vplus", "VplusBar"]), nat, nat, inc),
    st.builds(Tube, nat, nat),
    st.builds(FileRef, st.from_regex(r"[A-Za-z0-9_./-]{1,12}", fullmatch=True)),
)
exprs = st.recursive(
    leaf,
    lambda inner: st.builds(Tubey, inner, st.integers(-9, 9), st.integers(-9, 9), nat, nat, st.booleans()),
    max_leaves=4,
)


@given(exprs)
def test_parse_inverts_print(e):
    assert parse_region_expr(print_region_expr(e)) == e


# region files

def test_region_file_format(tmp_path):
    r = Region([Up(0, 0), Down(0, -1), Up(1, -1)]).with_weights({lozenge(Up(0, 0), Down(0, -1)): Fraction(1, 2)})
    text = format_region(r)
    assert text.splitlines() == ["t D 0 -1", "t U 1 -1", "t U 0 0", "w U 0 0 D 0 -1 1/2"]
    assert parse_region(text) == r
    path = tmp_path / "r.txt"
    save_region(r, path)
    assert load_region(path) == r
    assert region_from_text(f"file({path})") == r


def test_region_file_comments_and_errors():
    assert parse_region("# a comment\n\nt U 0 0\nt D 0 -1  # trailing\n") == Region([Up(0, 0), Down(0, -1)])
    with pytest.raises(RegionFileError) as err:
        parse_region("t U 0 0\nt U 0 0\n")
    assert err.value.line == 2
    with pytest.raises(RegionFileError):
        parse_region("t X 0 0\n")
    with pytest.raises(RegionFileError):
        parse_region("w U 0 0 D 0 -1 zz\n")


@settings(max_examples=60)
@given(small_regions())
def test_region_files_round_trip(r):
    assert parse_region(format_region(r)) == r


# commands

@pytest.mark.parametrize("argv,out", [
    (["count", "hex(1,1,1)"], "2\n"),
    (["count", "--symmetric=v", "hex(2,1,1)"], "1\n"),
    (["count", "VplusBar(1,1;[])"], "3/2\n"),
    (["count", "--symmetric=h", "hex(2,1,1)"], "3\n"),
    (["formula", "P", "2", "2", "2"], "20\n"),
    (["formula", "Pvert", "1", "2"], "2\n"),
    (["formula", "underline", "3", "2", "1", "3"], "3\n"),
    (["formula", "pochhammer", "1/2", "2"], "3/4\n"),
    (["formula", "degree", "1", "0"], "1\n"),
    (["interpolate", "Vplus", "--b", "1"], "1 1\n"),
    (["interpolate", "VplusBar", "--b", "1"], "1/2 1\n"),
    (["matrix", "VplusBar", "--a", "1", "--b", "1"], "3/2\ndet=3/2\n"),
])
def test_command_outputs(capsys, argv, out):
    code, got, _ = run(capsys, *argv)
    assert code == 0
    assert got == out


def test_untileable_family_prints_an_empty_list(capsys):
    code, got, _ = run(capsys, "interpolate", "V", "--b", "1", "--u", "1")
    assert code == 0
    lines = got.split("\n")
    assert lines[0] == ""
    assert lines[1].startswith("NOTE zero polynomial")


def test_verify_passes(capsys):
    code, got, _ = run(capsys, "verify", "halfshift", "--b", "1", "--n", "0")
    assert code == 0
    assert got.splitlines()[-1] == "PASS"
    assert all(line.startswith("PASS halfshift") for line in got.splitlines()[:-1])
    code, got, _ = run(capsys, "verify", "factorization", "--region", "dhex(2,1,1,2;[2];[2])")
    assert code == 0 and got.endswith("PASS\n")


@pytest.mark.parametrize("extra", [
    ["main", "--a", "3", "--b", "2", "--u", "2,4"],
    ["lgv", "--a", "2", "--b", "1", "--u", "2"],
    ["symmetric-product", "--a", "3", "--b", "4"],
    ["forced", "--region", "V(2,2;[2])"],
    ["forced-dents", "--a", "1", "--b", "1", "--u", "2,4"],
    ["kuo1", "--a", "1", "--b", "1", "--u", "3,4"],
    ["kuo2", "--a", "2", "--b", "2", "--u", "3"],
    ["splitting", "--region", "hex(2,2,2)", "--line", "col:1", "--per-tiling"],
    ["cauchy-binet", "--a", "2", "--b", "1"],
    ["halfshift", "--region", "V(0,1;[])", "--h", "1"],
])
def test_verify_other_identities(capsys, extra):
    code, got, _ = run(capsys, "verify", *extra)
    assert code == 0, got
    assert got.endswith("PASS\n")


def test_verify_kuo_with_explicit_triangles(capsys):
    tris = ["Up(1,-4)", "Up(3,-3)", "Up(1,-1)", "Up(0,-3)"]
    argv = ["verify", "kuo1", "--region", "dhex(1,1,1,2;[];[])"]
    for t in tris:
        argv += ["--tri", t]
    code, got, _ = run(capsys, *argv)
    assert code == 0 and got.endswith("PASS\n")
    bad = argv[:4] + ["--tri", tris[0], "--tri", tris[2], "--tri", tris[1], "--tri", tris[3]]
    code, _, err = run(capsys, *bad)
    assert code == 3
    assert "cyclic order" in err


def test_failed_verification_exits_one(capsys, monkeypatch):
    import lozenge.cli as cli

    monkeypatch.setattr(cli.F, "dented_half_count", lambda a, b, u, f0: Fraction(-1))
    code, got, _ = run(capsys, "verify", "main", "--a", "1", "--b", "1")
    assert code == 1
    assert got.splitlines() == ["FAIL main a=1 b=1 u=[] lhs=1 rhs=-1", "FAIL"]


@pytest.mark.parametrize("argv", [
    ["count", "hex(1,1"],
    ["count", "V(1,1;[9])"],
    ["formula", "nosuch", "1"],
    ["formula", "P", "1", "2"],
    ["verify", "main", "--b", "1"],
    ["nosuchcommand"],
])
def test_usage_errors_exit_two(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as stop:
        code = stop.code
    assert code == 2


def test_parse_error_reports_the_offset(capsys):
    code, _, err = run(capsys, "count", "hex(1,x,1)")
    assert code == 2
    assert "at byte 6" in err


@pytest.mark.parametrize("argv", [
    ["count", "--symmetric=v", "hex(1,2,1)"],
    ["verify", "factorization", "--region", "hex(1,1,2)"],
    ["verify", "kuo2", "--a", "1", "--b", "2", "--u", "2"],
    ["render", "hex(1,1,1)", "--tiling", "5"],
])
def test_precondition_errors_exit_three(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 3
    assert err.startswith("precondition:")


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "lozenge", "count", "hex(2,2,2)"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "20\n"


# drawing

def test_svg_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert run(capsys, "render", "hex(6,4,5)", "--tiling", "0", "-o", str(a))[0] == 0
    assert run(capsys, "render", "hex(6,4,5)", "--tiling", "0", "-o", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    text = a.read_text()
    assert text.startswith("<?xml") or text.startswith("<svg")
    assert text.count("<polygon") == 2 * 6 * 4 + 2 * 4 * 5 + 2 * 5 * 6 + (6 * 4 + 4 * 5 + 5 * 6)


def test_svg_draws_region_and_weights():
    text = render_svg(semiregular_hexagon(1, 1, 1))
    assert text.count("<polygon") == 6
    assert "<ellipse" not in text
    bar = region_from_text("VplusBar(2,1;[])")
    tiling = next(iter(enumerate_tilings(bar)))
    drawn = render_svg(bar, tiling.lozenges)
    assert "<ellipse" in drawn
    assert drawn == render_svg(bar, list(reversed(tiling.lozenges)))


def test_build_resolves_relative_files(tmp_path):
    save_region(semiregular_hexagon(1, 1, 1), tmp_path / "h.txt")
    assert build(parse_region_expr("file(h.txt)"), base=tmp_path) == semiregular_hexagon(1, 1, 1)
