import fibtri


def test_fib():
    assert fibtri.fib(12) == 144
    assert fibtri.fib(200) == 280571172992510140037611932413038677189525


def test_triangle_rows():
    rows = fibtri.triangle_rows("even", 6)
    assert rows[6] == [1, 6, 18, 29]
    odd = fibtri.triangle_rows("odd", 5)
    assert odd[5] == [1, 4, 8, 5, 1]


def test_partition_sums():
    assert fibtri.partition_sum("even", 6) == 377
    assert fibtri.partition_sum("odd", 6) == 233


def test_restricted_delannoy():
    assert [fibtri.restricted_delannoy(n) for n in range(6)] == [
        1, 3, 12, 53, 247, 1192]


def test_diagonal_polynomial():
    fit = fibtri.diagonal_polynomial("odd", "ddouble", 2)
    assert fit["coeffs"] == [-4, 1, 1]
    assert fit["t_min"] == 6
    assert fit["binomial"] == "C(t,2)+C(t,1)-4"


def test_render():
    csv = fibtri.render_triangle("even", 2, "csv")
    assert csv == "0,0,1\n1,0,1\n2,0,1\n2,1,2\n"


def test_verify():
    report = fibtri.verify(20, 6)
    assert report["all_pass"] is True
    assert all(s["pass"] for s in report["suites"])
