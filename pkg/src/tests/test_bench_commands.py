import re
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from algorithms.models import AlgorithmKind, RunReport
from bench.response import ComparisonRow
from bench.service import comparison
from bench.service.chart import chart_service
from bench.service.report import report_service
from listcore.models import CostModel


DEMO_CSV = (
    "file,n,list_size,algo,cost_model,total_cost\n"
    "demo,6,3,fc,full,12\n"
    "demo,6,3,vfc,full,9\n"
)


def run_command(name, *args):
    out = StringIO()
    err = StringIO()
    call_command(name, *args, stdout=out, stderr=err)
    return out.getvalue(), err.getvalue()


def bar_heights(svg):
    return re.findall(r'<rect x="[^"]+" y="[^"]+" width="22" height="([^"]+)"', svg)


def test_bench_run_demo_csv(tmp_path):
    # given
    csv_path = tmp_path / "demo.csv"

    # when
    out, _ = run_command("bench_run", "--demo", "--csv", str(csv_path))

    # then
    assert csv_path.read_text(encoding="utf-8") == DEMO_CSV
    assert "demo" in out
    assert "12" in out and "9" in out


def test_bench_run_demo_all_algorithms(tmp_path):
    csv_path = tmp_path / "demo.csv"

    run_command(
        "bench_run", "--demo", "--algos", "mtf,trans,fc,vfc", "--csv", str(csv_path)
    )

    rows = report_service.parse_long_csv(csv_path.read_text(encoding="utf-8"))
    assert rows[0].costs == {"mtf": 9, "trans": 10, "fc": 12, "vfc": 9}


def test_bench_run_demo_partial_cost_model(tmp_path):
    csv_path = tmp_path / "demo.csv"

    run_command(
        "bench_run", "--demo", "--cost-model", "partial", "--csv", str(csv_path)
    )

    # one unit less per step: six FC steps, three VFC steps
    assert csv_path.read_text(encoding="utf-8") == (
        "file,n,list_size,algo,cost_model,total_cost\n"
        "demo,6,3,fc,partial,6\n"
        "demo,6,3,vfc,partial,6\n"
    )


def test_bench_run_wide_csv(tmp_path):
    wide_path = tmp_path / "wide.csv"

    run_command("bench_run", "--demo", "--wide-csv", str(wide_path))

    assert wide_path.read_text(encoding="utf-8") == (
        "File Name,Size of Req Seq,Size of List,Access Cost FC,Access Cost VFC\n"
        "demo,6,3,12,9\n"
    )


@pytest.mark.parametrize("algos", ["", "fc,bogus"])
def test_bench_run_rejects_bad_algorithms(algos):
    with pytest.raises(CommandError) as e:
        run_command("bench_run", "--demo", f"--algos={algos}")
    assert e.value.returncode == 1


def test_bench_run_requires_one_source(tmp_path):
    corpus = tmp_path / "a.txt"
    corpus.write_bytes(b"abc")

    with pytest.raises(CommandError) as e:
        run_command("bench_run", "--demo", str(corpus))
    assert e.value.returncode == 1

    with pytest.raises(CommandError) as e:
        run_command("bench_run")
    assert e.value.returncode == 1


def test_bench_run_rejects_bad_strip_bytes():
    with pytest.raises(CommandError) as e:
        run_command("bench_run", "--demo", "--strip-bytes", "zz")
    assert e.value.returncode == 1


def test_bench_run_unreadable_file(tmp_path):
    with pytest.raises(CommandError) as e:
        run_command("bench_run", str(tmp_path / "missing.txt"))
    assert e.value.returncode == 1


def test_bench_run_blank_file(tmp_path):
    blank = tmp_path / "blank.txt"
    blank.write_bytes(b" \r\n \n")

    with pytest.raises(CommandError) as e:
        run_command("bench_run", str(blank))
    assert e.value.returncode == 1


def test_bench_run_files_keep_argument_order(tmp_path):
    # given
    paths = []
    contents = [("b.txt", b"xyzzy"), ("a.txt", b"ab ba\nab"), ("c.txt", b"q")]
    for name, content in contents:
        path = tmp_path / name
        path.write_bytes(content)
        paths.append(str(path))
    serial_csv = tmp_path / "serial.csv"
    parallel_csv = tmp_path / "parallel.csv"

    # when
    run_command("bench_run", *paths, "--csv", str(serial_csv))
    run_command("bench_run", *paths, "--jobs", "2", "--csv", str(parallel_csv))

    # then
    rows = report_service.parse_long_csv(serial_csv.read_text(encoding="utf-8"))
    assert [row.file for row in rows] == ["b.txt", "a.txt", "c.txt"]
    assert [(row.n, row.list_size) for row in rows] == [(5, 3), (6, 2), (1, 1)]
    assert parallel_csv.read_text(encoding="utf-8") == serial_csv.read_text(
        encoding="utf-8"
    )


def test_bench_run_limit_keeps_full_alphabet(tmp_path):
    corpus = tmp_path / "a.txt"
    corpus.write_bytes(b"aaaabcd")
    csv_path = tmp_path / "out.csv"

    run_command("bench_run", str(corpus), "--limit", "3", "--csv", str(csv_path))

    rows = report_service.parse_long_csv(csv_path.read_text(encoding="utf-8"))
    assert (rows[0].n, rows[0].list_size) == (3, 4)


def test_bench_run_generator_is_deterministic(tmp_path):
    first = tmp_path / "first.csv"
    second = tmp_path / "second.csv"
    args = ["--generate", "zipf", "--alphabet-size", "6", "--length", "300"]

    run_command("bench_run", *args, "--seed", "7", "--csv", str(first))
    run_command("bench_run", *args, "--seed", "7", "--csv", str(second))

    assert first.read_text(encoding="utf-8") == second.read_text(encoding="utf-8")
    rows = report_service.parse_long_csv(first.read_text(encoding="utf-8"))
    assert rows[0].n == 300
    assert rows[0].list_size == 6


def test_bench_run_trace(tmp_path):
    out, _ = run_command("bench_run", "--demo", "--trace")

    assert "demo vfc step=2 request=2 position=2 cost=3 consumed=2" in out
    assert "demo vfc step=3 request=3 position=3 cost=5 consumed=3" in out
    assert "demo fc step=6" in out


def test_bench_run_cost_below_request_count_is_an_invariant_breach(mocker):
    # given
    mocker.patch.object(
        comparison.run_service,
        "run_algorithm",
        return_value=RunReport(
            kind=AlgorithmKind.FC,
            cost_model=CostModel.FULL,
            vfc_policy=None,
            n=6,
            total_cost=2,
        ),
    )

    # when
    with pytest.raises(CommandError) as e:
        run_command("bench_run", "--demo")

    # then
    assert e.value.returncode == 3


def test_bench_run_and_chart_round_trip(tmp_path):
    # given
    csv_path = tmp_path / "demo.csv"
    chart_path = tmp_path / "direct.svg"
    svg_path = tmp_path / "from_csv.svg"

    # when
    run_command(
        "bench_run", "--demo", "--csv", str(csv_path), "--chart", str(chart_path)
    )
    run_command("bench_chart", str(csv_path), "--output", str(svg_path))

    # then
    svg = svg_path.read_text(encoding="utf-8")
    assert svg == chart_path.read_text(encoding="utf-8")
    assert svg.startswith("<?xml")
    assert svg.count('<g class="group">') == 1
    assert "<title>demo fc: 12</title>" in svg
    assert "<title>demo vfc: 9</title>" in svg


def test_bench_chart_to_stdout(tmp_path):
    csv_path = tmp_path / "demo.csv"
    csv_path.write_text(DEMO_CSV, encoding="utf-8")

    out, _ = run_command("bench_chart", str(csv_path))

    assert out.rstrip().endswith("</svg>")


def test_bench_chart_rejects_malformed_csv(tmp_path):
    csv_path = tmp_path / "bad.csv"
    csv_path.write_text("name,cost\nx,1\n", encoding="utf-8")

    with pytest.raises(CommandError) as e:
        run_command("bench_chart", str(csv_path))
    assert e.value.returncode == 1


def test_bench_chart_rejects_empty_report(tmp_path):
    csv_path = tmp_path / "empty.csv"
    csv_path.write_text(DEMO_CSV.splitlines(keepends=True)[0], encoding="utf-8")

    with pytest.raises(CommandError) as e:
        run_command("bench_chart", str(csv_path))
    assert e.value.returncode == 1


def test_chart_equal_costs_draw_equal_bars():
    rows = [
        ComparisonRow(
            file=name, n=10, list_size=3, cost_model=CostModel.FULL, costs=costs
        )
        for name, costs in [("a", {"fc": 40, "vfc": 40}), ("b", {"fc": 20, "vfc": 10})]
    ]

    svg = chart_service.render(rows)

    heights = [float(h) for h in bar_heights(svg)]
    assert len(heights) == 4
    assert heights[0] == heights[1]
    assert heights[2] == pytest.approx(2 * heights[3])
    assert svg.count('<g class="group">') == 2


def test_bench_verify_passes():
    out, _ = run_command("bench_verify", "--m", "2", "--n-max", "4")

    assert "PASS: 31 instances checked" in out


def test_bench_verify_defaults_cover_1093_instances():
    out, _ = run_command("bench_verify")

    assert "PASS: 1093 instances checked" in out


def test_bench_verify_bounds():
    with pytest.raises(CommandError) as e:
        run_command("bench_verify", "--m", "5")
    assert e.value.returncode == 1


def test_bench_verify_reports_violations(mocker):
    # given: engines charge one unit too much, the oracle does not
    mocker.patch.object(CostModel, "access_cost", lambda self, position: position + 1)
    err = StringIO()

    # when
    with pytest.raises(CommandError) as e:
        call_command("bench_verify", "--m", "2", "--n-max", "2", stderr=err)

    # then
    assert e.value.returncode == 2
    assert "fc-oracle-equivalence" in err.getvalue()


def test_long_csv_round_trip_keeps_duplicate_inputs():
    # given: two inputs that share a name and sizes
    rows = [
        ComparisonRow(
            file="book1", n=6, list_size=3, cost_model=CostModel.FULL, costs=costs
        )
        for costs in ({"fc": 12, "vfc": 9}, {"fc": 12, "vfc": 9}, {"fc": 7, "vfc": 7})
    ]

    # when
    parsed = report_service.parse_long_csv(report_service.write_long_csv(rows))

    # then
    assert parsed == rows


def test_bench_run_same_file_twice_charts_two_groups(tmp_path):
    # given
    corpus = tmp_path / "book1"
    corpus.write_bytes(b"abracadabra")
    csv_path = tmp_path / "out.csv"
    chart_path = tmp_path / "direct.svg"
    svg_path = tmp_path / "from_csv.svg"

    # when
    run_command(
        "bench_run",
        str(corpus),
        str(corpus),
        "--csv",
        str(csv_path),
        "--chart",
        str(chart_path),
    )
    run_command("bench_chart", str(csv_path), "--output", str(svg_path))

    # then
    rows = report_service.parse_long_csv(csv_path.read_text(encoding="utf-8"))
    assert [row.file for row in rows] == ["book1", "book1"]
    svg = svg_path.read_text(encoding="utf-8")
    assert svg.count('<g class="group">') == 2
    assert svg == chart_path.read_text(encoding="utf-8")


def test_bench_chart_rejects_negative_costs(tmp_path):
    csv_path = tmp_path / "negative.csv"
    csv_path.write_text(DEMO_CSV.replace(",9\n", ",-9\n"), encoding="utf-8")

    with pytest.raises(CommandError) as e:
        run_command("bench_chart", str(csv_path))
    assert e.value.returncode == 1
