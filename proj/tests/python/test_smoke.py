import modrep


def sorted_diag(m):
    rows = modrep.matrix_rows(m)
    return sorted(rows[i][i] for i in range(len(rows)))


def test_version():
    assert modrep.__version__


def test_cartan_sl2_level1():
    out = modrep.cartan(modrep.sl2_spec(3, 1), p=3, field_degree=2)
    assert out["simple_dims"] == [1, 2, 3]
    c = modrep.matrix_rows(out["cartan"])
    # diag(3,1,3) up to simultaneous permutation
    assert sorted_diag(out["cartan"]) == [1, 3, 3]
    assert all(c[i][j] == 0 for i in range(3) for j in range(3) if i != j)
    assert int(out["cartan_det"]) == 9


def test_chartable_sl2_level1():
    out = modrep.chartable(modrep.sl2_spec(3, 1))
    assert sorted(out["degrees"]) == [1, 1, 1, 2, 2, 2, 3]
    assert out["classes"]["count"] == 7
    assert sum(d * d for d in out["degrees"]) == out["group_order"]


def test_chartable_explicit_spec():
    spec = {
        "modulus": 3,
        "dim": 2,
        "generators": [[[1, 1], [0, 1]], [[2, 0], [0, 1]]],
    }
    out = modrep.chartable(spec)
    assert out["group_order"] == 6
    assert sorted(out["degrees"]) == [1, 1, 2]


def test_tower_reproduces_paper_matrices():
    out = modrep.tower(p=3, depth=2, n_max=3)
    assert out["levels"] == [24, 648]
    assert out["section_orders"] == [27]
    cmp = out["paper_comparison"]
    assert cmp["matches"] is True
    perm = cmp["permutation"]

    def permuted(m):
        rows = modrep.matrix_rows(m)
        n = len(rows)
        out_rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                out_rows[perm[i]][perm[j]] = rows[i][j]
        return out_rows

    assert permuted(out["b"]) == [[9, 18, 0], [6, 21, 0], [0, 0, 27]]
    assert permuted(out["cartan_matrices"][1]) == [
        [27, 18, 0],
        [18, 21, 0],
        [0, 0, 81],
    ]
    assert permuted(out["cartan_matrices"][2]) == [
        [567, 540, 0],
        [540, 549, 0],
        [0, 0, 2187],
    ]
    assert [int(d) for d in out["determinants"]] == [9, 3**9, 3**16]


def test_closed_form():
    out = modrep.sl2_closed_form(8)
    assert int(out["determinant"]) == 3 ** (7 * 8 - 5)
    rows = modrep.matrix_rows(out["cartan"])
    assert rows[0][0] == (3 ** 22 + 3 ** 9) // 4
    assert rows[2][2] == 3 ** 22


def test_brauer_and_decomp_s3():
    spec = {
        "modulus": 3,
        "dim": 2,
        "generators": [[[1, 1], [0, 1]], [[2, 0], [0, 1]]],
    }
    bt = modrep.brauertable(spec, p=3, field_degree=2)
    assert bt["dims"] == [1, 1]
    d = modrep.decomp(spec, p=3, field_degree=2)
    rows = modrep.matrix_rows(d["decomposition"])
    assert sorted(map(tuple, rows)) == [(0, 1), (1, 0), (1, 1)]
