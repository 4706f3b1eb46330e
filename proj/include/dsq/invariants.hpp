#pragma once

#include <gmpxx.h>

#include <array>
#include <vector>

#include "dsq/graph.hpp"
#include "dsq/poly.hpp"

namespace dsq {

// what a Laplacian characteristic polynomial reveals on its own
struct BasicInvariants {
    int n = 0;
    mpz_class m;
    int components = 0;
    mpz_class spanning_trees;  // 0 when disconnected
};

BasicInvariants derive_basic_invariants(const IntPolynomial& lap_poly);

struct DegreeMoments {
    mpz_class s1;  // sum of degrees
    mpz_class s2;  // sum of squared degrees
    mpz_class s3;  // sum of cubed degrees
    mpz_class triangles;
};

// s2 and s3 from the Laplacian polynomial, given the triangle count
DegreeMoments degree_moment_sums(const IntPolynomial& lap_poly, const mpz_class& triangles);

struct DegreeDistribution {
    std::array<long long, 6> count{};  // count[i] = vertices of degree i, i = 0..5

    bool operator==(const DegreeDistribution&) const = default;
};

// all nonnegative solutions of the four moment equations with degrees 1..dmax
// (degree 0 joins the unknowns only when allow_isolated is set)
std::vector<DegreeDistribution> solve_degree_distribution(const mpz_class& n, const mpz_class& m,
                                                          const mpz_class& s2, const mpz_class& s3,
                                                          int dmax = 5,
                                                          bool allow_isolated = false);

struct BoundsReport {
    double mu1 = 0;     // largest Laplacian eigenvalue, numeric
    long long lower = 0;  // max degree
    long long upper = 0;  // max over edges of the endpoint degree sum
    bool ok = false;
};

// largest-eigenvalue sandwich: max degree below mu1, mu1 at most the best
// edge degree sum, both up to tol
BoundsReport check_spectral_bounds(const Graph& g, double tol = 1e-9);

// Laplacian polynomial of the complement from the Laplacian polynomial alone
IntPolynomial complement_spectrum(const IntPolynomial& lap_poly, int n);

// spanning trees counted directly as a Laplacian cofactor determinant
mpz_class spanning_trees_by_cofactor(const Graph& g);

}  // namespace dsq
