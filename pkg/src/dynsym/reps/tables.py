"""Abstract structure-constant tables for the algebra families.

Each table maps an ordered pair of generator labels to the expected
bracket as a list of ``(rational coefficient, target label)`` pairs.
Rotation labels are normalised to component order j < k with the sign
tracked; vanishing brackets give the empty list.
"""

from __future__ import annotations

from fractions import Fraction


def _norm_R(coef, n, j, k):
    if j == k:
        return None
    if j > k:
        return (-coef, ("R", n, k, j))
    return (coef, ("R", n, j, k))


def _add(out, coef, label):
    if coef:
        out.append((coef, label))


def _rot_rot(out, n, j, k, m, l, i):
    # [R_n^{(jk)}, R_m^{(li)}] = d_ji R^{(lk)} - d_kl R^{(ji)} + d_ki R^{(jl)} - d_jl R^{(ik)}
    for delta, a, b in (
        (j == i, l, k),
        (-(k == l), j, i),
        (k == i, j, l),
        (-(j == l), i, k),
    ):
        if delta:
            normed = _norm_R(Fraction(1 if delta > 0 else -1), n + m, a, b)
            if normed:
                _add(out, normed[0], normed[1])


def sv_table(la, lb):
    """Schroedinger-Virasoro brackets; [X,Y] carries weight n/2 - m."""
    return _xy_table(la, lb, half_weight=True)


def cga_table(la, lb):
    """Conformal-galilean brackets; [X,Y] carries weight n - m, [Y,Y] = 0."""
    return _xy_table(la, lb, half_weight=False)


def _xy_table(la, lb, half_weight: bool):
    out = []
    ka, kb = la[0], lb[0]
    if ka == "X" and kb == "X":
        n, m = la[1], lb[1]
        _add(out, n - m, ("X", n + m))
    elif ka == "X" and kb == "Y":
        n, m = la[1], lb[1]
        w = n / 2 - m if half_weight else n - m
        _add(out, w, ("Y", n + m, lb[2]))
    elif ka == "Y" and kb == "X":
        for coef, label in _xy_table(lb, la, half_weight):
            _add(out, -coef, label)
    elif ka == "X" and kb == "M":
        n, m = la[1], lb[1]
        _add(out, -m, ("M", n + m))
    elif ka == "M" and kb == "X":
        for coef, label in _xy_table(lb, la, half_weight):
            _add(out, -coef, label)
    elif ka == "X" and kb == "R":
        n, m = la[1], lb[1]
        normed = _norm_R(-m, n + m, lb[2], lb[3])
        if normed:
            _add(out, normed[0], normed[1])
    elif ka == "R" and kb == "X":
        for coef, label in _xy_table(lb, la, half_weight):
            _add(out, -coef, label)
    elif ka == "Y" and kb == "Y":
        if half_weight and la[2] == lb[2]:
            m, mp = la[1], lb[1]
            _add(out, m - mp, ("M", m + mp))
    elif ka == "R" and kb == "Y":
        n, j, k = la[1], la[2], la[3]
        m, l = lb[1], lb[2]
        if j == l:
            _add(out, Fraction(1), ("Y", n + m, k))
        if k == l:
            _add(out, Fraction(-1), ("Y", n + m, j))
    elif ka == "Y" and kb == "R":
        for coef, label in _xy_table(lb, la, half_weight):
            _add(out, -coef, label)
    elif ka == "R" and kb == "R":
        _rot_rot(out, la[1], la[2], la[3], lb[1], lb[2], lb[3])
    # M-M, M-Y, M-R, Theta-anything: zero
    return out


def ecga_table(la, lb):
    """cga(2) table plus the exotic central extension."""
    ka, kb = la[0], lb[0]
    if ka == "Y" and kb == "Y" and la[2] != lb[2]:
        n, m = la[1], lb[1]
        if n + m != 0:
            return []
        # [Y_n^{(1)}, Y_m^{(2)}] = (3 d_{n,0} - 2) Theta
        coef = Fraction(3 if n == 0 else 0) - 2
        if la[2] == 1:
            return [(coef, ("Theta",))]
        return [(-coef, ("Theta",))]
    if ka == "Theta" or kb == "Theta":
        return []
    return cga_table(la, lb)


def witt_table(la, lb):
    """[l_n, l_m] = (n-m) l_{n+m}; holomorphic and antiholomorphic commute."""
    out = []
    if la[0] == lb[0] and la[0] in ("l", "lb", "X"):
        n, m = la[1], lb[1]
        _add(out, n - m, (la[0], n + m))
    return out
