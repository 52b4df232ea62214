from qswindows import verify


def test_bundled_suite_all_pass():
    results = verify.run_bundled(seed=1)
    failed = [r.line() for r in results if not r.passed]
    assert not failed, failed
    names = {r.name for r in results}
    # the named identity checks must all be represented
    for expected in (
        "eta-symmetry", "wall-iff-boundary-points", "window-polytope-cross-check",
        "mu-involution", "window-partition", "dagger-pairing", "beta-dagger-duality",
        "face-lattice-point-symmetry", "crossing-orientation",
        "toric-single-wall-face", "toric-wedge-sums-stay-common",
        "complex-endpoint-terms", "complex-euler-telescope",
        "mutation-reaches-far-window", "mutation-periodicity",
        "virtual-class-telescoping", "kernel-rank-binomials",
        "exchange-count-positive", "minimality-criteria-agree",
        "rank1-reduction-normal-form", "transcript-window-bijections",
        "cy-model-facts",
    ):
        assert expected in names, expected


def test_check_result_lines():
    good = verify.CheckResult(name="x", subject="s", passed=True)
    bad = verify.CheckResult(name="x", subject="s", passed=False, detail="boom")
    assert good.line().startswith("[pass]")
    assert "boom" in bad.line()
