#pragma once

#include <utility>
#include <vector>

#include "gpir/graphs.hpp"
#include "gpir/linalg.hpp"
#include "gpir/storage.hpp"

namespace gpir {

// Per-retrieval randomness for the 2-replication protocol.
struct UserSecret {
    std::vector<Elem> alpha; // length n, entries in F_q*
    std::vector<Elem> gamma; // length s, entries in F_q*
    Elem h = 0;              // in F_q \ {0,1}
    int phi = 0;             // requested file, 1-based
};

// Coefficients actually sent to one server: (file index, coefficient).
using SparseQuery = std::vector<std::pair<int, Elem>>;

UserSecret sample_secret(const StorageGraph& g, int phi, const Field& f, Rng& rng);

// Q = diag(gamma) * I_phi * diag(alpha), where I_phi is the incidence matrix
// with each column's entry at the larger-indexed endpoint replaced by -1 and
// the remaining 1 of column phi replaced by h. Requires a 2-uniform graph.
Mat build_query_matrix(const StorageGraph& g, const UserSecret& secret, const Field& f);

std::pair<Mat, UserSecret> gen_queries(const StorageGraph& g, int phi, const Field& f, Rng& rng);

// Row `server` of Q restricted to its support (the files the server holds).
SparseQuery sparse_row(const Mat& Q, const StorageGraph& g, int server);

// a_j = sum of coefficient * stored file over the queried files.
std::vector<Elem> answer(const ServerContents& contents, const SparseQuery& query, const Field& f);

// 1 * diag(gamma)^-1 * (stacked answers) = (h-1) * alpha_phi * x_phi; divides
// out the scalar and returns x_phi.
std::vector<Elem> reconstruct(const std::vector<std::vector<Elem>>& answers,
                              const UserSecret& secret, const Field& f);

struct Transcript {
    UserSecret secret;
    Mat query;                              // full s x n matrix
    std::vector<SparseQuery> rows;          // per server, as transmitted
    std::vector<std::vector<Elem>> answers; // per server
    std::vector<Elem> result;
    std::size_t upload = 0;   // coefficients sent (= 2n)
    std::size_t download = 0; // answer symbols (= s*f)
};

Transcript run_protocol(const StorageGraph& g, const Dataset& X, int phi, Rng& rng);

} // namespace gpir
