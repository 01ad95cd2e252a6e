#pragma once

#include <map>
#include <vector>

#include "gpir/graphs.hpp"
#include "gpir/pir2.hpp"
#include "gpir/rational.hpp"
#include "gpir/storage.hpp"

namespace gpir {

// [N,K] MDS code given by a K x N generator.
struct MdsCode {
    int N = 0;
    int K = 0;
    Mat generator;
};

// Reed-Solomon: Vandermonde rows over evaluation points 0..N-1. Requires
// q >= N; the MDS property is verified on construction for small N.
MdsCode rs_code(int N, int K, const Field& f);

// The [2,1] code {(x, -x)}: dispersal degenerates to signed 2-replication.
MdsCode neg_pair_code(const Field& f);

// The [3,2] code {(x, y, x+y)}.
MdsCode parity_code(const Field& f);

// True iff every K x K minor of the generator is invertible.
bool is_mds(const MdsCode& code, const Field& f);

// Disjoint nonempty server groups L_1..L_N covering [s].
struct Partition {
    std::vector<std::vector<int>> parts; // each sorted ascending

    int N() const { return static_cast<int>(parts.size()); }
    int s() const;
    int part_of(int server) const; // 1-based part index
};

Partition make_partition(int s, std::vector<std::vector<int>> parts);

// [s] split into N consecutive equal blocks (requires N | s).
Partition block_partition(int s, int N);

struct CodedLayout {
    Partition partition;
    std::vector<std::vector<int>> hyperedges; // each: one server per part
};

// s divisible by 3: thirds L1/L2/L3; file (u,k) occupies {u, L2[k], L3[shift]}
// where the shift walks edge-disjoint perfect matchings between L2 and L3.
// Yields n = s^2/9 hyperedges, any two sharing at most one server.
CodedLayout parity_layout(int s);

struct CodedSystem {
    Field field;
    MdsCode code;
    Partition partition;
    StorageGraph hypergraph;                  // N-uniform, N-partite
    std::vector<std::vector<int>> assignment; // assignment[i-1][j-1] = server with y_{i,j}
    int n = 0;
    int f = 0;    // file length
    int rows = 0; // f / K symbols per codeword coordinate
    std::vector<ServerContents> servers;      // holdings: file -> its codeword symbol here
};

// File x_i reshaped to (f/K) x K, multiplied by the generator; symbol (i,j)
// stored at assignment[i][j], which must lie in part j.
CodedSystem encode_and_disperse(const Dataset& X, const MdsCode& code,
                                const Partition& partition,
                                const std::vector<std::vector<int>>& assignment);

// Derive the assignment when each hyperedge has exactly one server per part.
std::vector<std::vector<int>> assignment_from_hyperedges(
    const Partition& partition, const std::vector<std::vector<int>>& hyperedges);

// Retrieval schedule: b files over r rounds, Kb = r(N-K). J[i-1][j-1] is the
// set of codeword positions of file j recovered in round i.
struct RoundPlan {
    int r = 0;
    int b = 0;
    std::vector<std::vector<std::vector<int>>> J;
};

RoundPlan plan_rounds(int N, int K);

struct CodedSecret {
    std::vector<Elem> alpha; // length n
    std::vector<Elem> gamma; // length s
    Elem h = 0;
};

CodedSecret sample_coded_secret(int n, int s, const Field& f, Rng& rng);

struct CodedRound {
    CodedSecret secret;
    std::vector<SparseQuery> queries;       // per server
    std::vector<std::vector<Elem>> answers; // per server, length f/K
};

// Round i: server j in part m gets gamma_j * alpha_t * h^[t targeted at m]
// for each file t whose symbol it stores, and answers with the combination
// of its stored symbols.
CodedRound coded_round(const CodedSystem& sys, const RoundPlan& plan, int round,
                       const std::vector<int>& phis, const CodedSecret& secret);

// Per round: aggregate answers per part, erasure-decode the noise-free
// codeword matrix from the K untouched positions, divide out the offsets to
// collect codeword symbols; after all rounds decode the b requested files.
std::vector<std::vector<Elem>> coded_reconstruct(const CodedSystem& sys, const RoundPlan& plan,
                                                 const std::vector<int>& phis,
                                                 const std::vector<CodedRound>& rounds);

struct CodedTranscript {
    RoundPlan plan;
    std::vector<CodedRound> rounds;
    std::vector<std::vector<Elem>> files;
    std::size_t upload = 0;
    std::size_t download = 0;
    Rational rate; // retrieved symbols / downloaded symbols = (N-K)/s
};

// Fresh (alpha, gamma, h) per round by default; reuse_secret repeats the
// round-1 draw across rounds instead.
CodedTranscript coded_retrieve(const CodedSystem& sys, const std::vector<int>& phis, Rng& rng,
                               bool reuse_secret = false);

Rational storage_overhead(const CodedSystem& sys); // N/K

// Exact joint distribution of the coefficients servers S receive in `round`,
// over all (alpha, gamma, h) restricted to the coordinates S observes.
std::map<std::vector<Elem>, long long> coded_view_distribution(
    const CodedSystem& sys, const RoundPlan& plan, int round, const std::vector<int>& phis,
    const std::vector<int>& S, long long budget = 10000000);

// True iff S's view distribution is identical across all distinct request
// tuples, in every round. Refuses sets with a polychromatic cycle.
bool verify_coded_privacy(const CodedSystem& sys, const std::vector<int>& S,
                          long long budget = 10000000);

} // namespace gpir
