from medial.cli import FAIL, PASS, USAGE, main


def test_count_pass(capsys):
    assert main(["count", "--arity", "4"]) == PASS
    out = capsys.readouterr().out
    assert "40" in out and "22" in out and "20" in out


def test_count_arity_two(capsys):
    assert main(["count", "--arity", "2"]) == PASS
    out = capsys.readouterr().out
    assert out.count("2  ") >= 1


def test_count_limit_error(capsys):
    assert main(["count", "--arity", "99"]) == USAGE


def test_verify_bm9(capsys):
    assert main(["verify", "bm9"]) == PASS
    assert "PASS bm9" in capsys.readouterr().out


def test_verify_config_b(capsys):
    assert main(["verify", "configB"]) == PASS
    out = capsys.readouterr().out
    assert "(c g)" in out


def test_verify_seven_block(capsys):
    assert main(["verify", "seven-block-negative"]) == PASS
    out = capsys.readouterr().out
    assert "closure size 4" in out


def test_verify_case1(capsys):
    assert main(["verify", "case1-negative"]) == PASS


def test_verify_unknown_target():
    assert main(["verify", "nonsense"]) == USAGE


def test_render_ascii_stable(capsys):
    args = ["render", "--monomial", "((x1 h x2) v (x3 h x4))", "--format", "ascii"]
    assert main(args) == PASS
    first = capsys.readouterr().out
    assert main(args) == PASS
    second = capsys.readouterr().out
    assert first == second
    assert "+" in first and "1" in first


def test_render_svg(tmp_path, capsys):
    out = tmp_path / "grid.svg"
    args = [
        "render",
        "--monomial",
        "((x1 h x2) v (x3 h x4))",
        "--format",
        "svg",
        "--out",
        str(out),
    ]
    assert main(args) == PASS
    first = out.read_bytes()
    assert main(args) == PASS
    assert out.read_bytes() == first
    assert first.startswith(b"<svg")


def test_render_partition_file(tmp_path):
    from medial.geometry import format_partition, realize
    from medial.trees import parse_monomial

    src = tmp_path / "p.txt"
    src.write_text(format_partition(realize(parse_monomial("(a h b)"))))
    assert main(["render", "--input", str(src), "--format", "ascii", "--out", str(tmp_path / "o.txt")]) == PASS


def test_render_parse_failure(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("(a h")
    assert main(["render", "--input", str(bad)]) == USAGE


def test_search_seeded_config_a(capsys):
    rel_text = "(((a h b) v (c h (d v e))) h (((f v g) h h) v (i h j)))"
    assert main(["search", "--monomial", rel_text]) == PASS
    out = capsys.readouterr().out
    assert "WITNESS" in out
    assert "examined 1 candidates" in out


def test_search_small_arity(capsys):
    assert main(["search", "--arity", "4"]) == PASS
    out = capsys.readouterr().out
    assert "examined 1 candidates" in out  # only the grid has both main cuts


def test_search_requires_input():
    assert main(["search"]) == USAGE


def test_search_with_slice_bounds(capsys):
    assert main(["search", "--arity", "5", "--slices", "2:4"]) == PASS
    out = capsys.readouterr().out
    assert "examined" in out


def test_search_output_is_deterministic(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert main(["search", "--arity", "5", "--out", str(a)]) == PASS
    assert main(["search", "--arity", "5", "--out", str(b)]) == PASS
    assert a.read_bytes() == b.read_bytes()


def test_verify_inconclusive_on_tiny_budget():
    from medial.cli import INCONCLUSIVE

    assert main(["verify", "bm9", "--budget", "1"]) == INCONCLUSIVE


def test_search_rule_restriction(capsys):
    seed = "(((a h b) v (c h (d v e))) h (((f v g) h h) v (i h j)))"
    assert main(["search", "--monomial", seed, "--rules", "interchange"]) == PASS
    out = capsys.readouterr().out
    assert "WITNESS" not in out  # interchange alone never permutes arguments
    assert main(["search", "--monomial", seed, "--rules", "assoc,interchange"]) == PASS
    out = capsys.readouterr().out
    assert "WITNESS" in out


def test_exit_code_priority():
    from medial.cli import INCONCLUSIVE, _worst

    assert _worst(PASS, INCONCLUSIVE) == INCONCLUSIVE
    assert _worst(INCONCLUSIVE, FAIL) == FAIL
    assert _worst(FAIL, INCONCLUSIVE) == FAIL
    assert _worst(PASS, PASS) == PASS


def test_count_graph_out(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert main(["count", "--arity", "4", "--graph-out", str(out)]) == PASS
    lines = out.read_text().splitlines()
    assert lines[0] == "vertices 22"
    assert len(lines) == 2  # exactly one edge at arity 4


def test_render_unit_square_single_box(capsys):
    assert main(["render", "--monomial", "x1", "--format", "ascii"]) == PASS
    out = capsys.readouterr().out
    assert out == "+---+\n| 1 |\n+---+\n"


def test_render_ten_block_configuration(capsys):
    text = "(((a h b) v (c h (d v e))) h (((f v g) h h) v (i h j)))"
    assert main(["render", "--monomial", text, "--format", "ascii"]) == PASS
    out = capsys.readouterr().out
    assert out == (
        "+---+---+---+---+\n"
        "|   | 5 |   |   |\n"
        "| 3 +---+ 9 |10 |\n"
        "|   | 4 |   |   |\n"
        "+---+---+---+---+\n"
        "|   |   | 7 |   |\n"
        "| 1 | 2 +---+ 8 |\n"
        "|   |   | 6 |   |\n"
        "+---+---+---+---+\n"
    )


def test_verify_config_c_reports_failure(capsys):
    assert main(["verify", "configC-negative"]) == FAIL
    out = capsys.readouterr().out
    assert "witnesses exist" in out
