#!/usr/bin/env python3
"""Independent reference values for the C++ test suites.

Everything here is computed with Python integers (math.comb) and plain
floating point, straight from the closed forms, without touching the C++
code path. Run it to regenerate tests/reference_values.hpp:

    python3 tests/oracles/reference_values.py > tests/reference_values.hpp
"""
from math import comb, log, pi, exp

HBAR = 1.054571817e-34
KB = 1.380649e-23
L = 1e-9
M = 1e-26
E0 = pi**2 * HBAR**2 / (2 * M * L**2)


def split(level, r):
    x = r / (1 + r)
    return level**2 * E0 * abs(1 / x**2 - 1 / (1 - x) ** 2)


def fermion_ratio(u, n, k, p):
    a = u * n * (2 * n + 1) + 3 * p * (n + 1)
    b = u * n * (2 * n + 1) + 3 * (k - p) * (n + 1)
    return (a / b) ** (1 / 3)


def fermion(u, N):
    n, k = divmod(N, 4 * u)
    hole = k >= 2 * u
    ke = 4 * u - k if hole else k
    f = [comb(2 * u, j) * comb(2 * u, ke - j) / comb(4 * u, ke) for j in range(ke + 1)]
    base = log(comb(4 * u, ke) / comb(2 * u, ke))
    d = base if ke % 2 else (1 - comb(2 * u, ke // 2) ** 2 / comb(4 * u, ke)) * base
    w0 = 0.0
    for j in range(1, (ke + 1) // 2):
        p = 2 * u - j if hole else j
        w0 += 2 * j * f[j] * split(n + 1, fermion_ratio(u, n, k, p))
    return d, w0


def fermion_limit(u, k):
    ke = 4 * u - k if k >= 2 * u else k
    s = sum(j * comb(2 * u, j) * comb(2 * u, ke - j) / comb(4 * u, ke) * (ke - 2 * j)
            for j in range(0, (ke + 1) // 2))
    return pi**2 * HBAR**2 / (u * u * M * L * L) * s


def boson(s, N):
    g = 2 * s
    den = comb(N + 4 * s + 1, 4 * s + 1)
    f = [comb(m + g, g) * comb(N - m + g, g) / den for m in range(N + 1)]
    base = log(den / comb(N + 2 * s, N))
    d = base if N % 2 else (1 - comb(N // 2 + g, g) ** 2 / comb(N + 4 * s + 1, N)) * base
    w0 = sum(2 * m * f[m] * split(1, (m / (N - m)) ** (1 / 3)) for m in range(1, (N + 1) // 2))
    return d, w0


def boson_limit_w0(N):
    return sum(m * comb(N, m) * split(1, (m / (N - m)) ** (1 / 3))
               for m in range(1, (N + 1) // 2)) / 2 ** (N - 1)


def entropy(ps):
    return -sum(p * log(p) for p in ps if p > 0)


def emit(name, value):
    print(f"inline constexpr double {name} = {value!r};")


def main():
    print("// Generated by tests/oracles/reference_values.py. Do not edit.")
    print("#pragma once\n")
    print("namespace szilard::reference {\n")
    emit("kE0", E0)
    r = 0.5 ** (1 / 3)
    emit("kCubeRootHalf", r)
    emit("kWallCubeRootHalf", L * r / (1 + r))
    emit("kSplitCubeRootHalf", split(1, r))
    d, w0 = fermion(5, 3)
    emit("kFermionU5N3Slope", d)
    emit("kFermionU5N3Absorbed", w0)
    emit("kFermionU5N3Tc", w0 / (d * KB))
    d, w0 = boson(0, 3)
    emit("kBosonS0N3Slope", d)
    emit("kBosonS0N3Absorbed", w0)
    emit("kBosonS0N3Tc", w0 / (d * KB))
    emit("kBosonLimitAbsorbedN3", boson_limit_w0(3))
    emit("kFermionLimitU5K3", fermion_limit(5, 3))
    for n in (1, 10, 100):
        N = 20 * n + 3
        emit(f"kFermionAverageU5K3n{n}", fermion(5, N)[1] / N)
    for n in (10, 100):
        emit(f"kSplitExactU5K3P1n{n}", split(n + 1, fermion_ratio(5, n, 3, 1)))
    emit("kEntropyFermionU1N2", entropy([1 / 6, 2 / 3, 1 / 6]))
    emit("kSlopeFermionU1N2", (1 - 4 / 6) * log(6))
    emit("kWeightFermionU5N3M1Beta1", 10 * 45 / 120 * exp(-1))
    emit("kWeightBosonS1N3M1Beta1", 3 * 6 / 10 * exp(-1))
    emit("kMaxWorkBosonS1", 4 / 7 * log(7 / 2))
    print("\n}  // namespace szilard::reference")


if __name__ == "__main__":
    main()
