#pragma once

#include <map>
#include <vector>

#include "gpir/pir2.hpp"

namespace gpir {

// Additive sharing of the indicator e_phi: an r x n matrix whose rows sum to
// e_phi. The first r-1 rows are uniform over all of F_q.
Mat gen_shares(int r, int n, int phi, const Field& f, Rng& rng);

// For each file j, the r entries of column j go to the servers of hyperedge j
// in ascending server order. Requires an r-uniform graph; zero coefficients
// are transmitted (they are shares, not omissions).
std::vector<SparseQuery> disperse_shares(const StorageGraph& g, const Mat& shares);

// Sum of all answers = e_phi * X = x_phi.
std::vector<Elem> reconstruct_r(const std::vector<std::vector<Elem>>& answers, const Field& f);

struct TranscriptR {
    Mat shares;
    std::vector<SparseQuery> rows;
    std::vector<std::vector<Elem>> answers;
    std::vector<Elem> result;
    std::size_t upload = 0;   // = r*n
    std::size_t download = 0; // = s*f
};

TranscriptR run_protocol_r(const StorageGraph& g, const Dataset& X, int phi, Rng& rng);

// Exact joint distribution of the coefficients servers S receive, over all
// q^((r-1)*n) share matrices. Used to check (r-1)-privacy by enumeration.
std::map<std::vector<Elem>, long long> share_view_distribution(
    const StorageGraph& g, int phi, const Field& f, const std::vector<int>& S,
    long long budget = 10000000);

} // namespace gpir
