#include "gpir/coded.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gpir {

namespace {

// Column-submatrix of the generator restricted to `positions` (1-based).
Mat generator_columns(const MdsCode& code, const std::vector<int>& positions) {
    Mat sub(code.generator.rows, positions.size());
    for (std::size_t c = 0; c < positions.size(); ++c)
        for (std::size_t r = 0; r < code.generator.rows; ++r)
            sub.at(r, c) = code.generator.at(r, positions[c] - 1);
    return sub;
}

} // namespace

bool is_mds(const MdsCode& code, const Field& f) {
    std::vector<int> cols(code.K);
    std::iota(cols.begin(), cols.end(), 1);
    // Walk all K-subsets of [N] in lexicographic order.
    for (;;) {
        if (rank_fq(f, generator_columns(code, cols)) != static_cast<std::size_t>(code.K))
            return false;
        int i = code.K - 1;
        while (i >= 0 && cols[i] == code.N - code.K + i + 1) --i;
        if (i < 0) break;
        ++cols[i];
        for (int j = i + 1; j < code.K; ++j) cols[j] = cols[j - 1] + 1;
    }
    return true;
}

namespace {

long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

MdsCode checked(MdsCode code, const Field& f) {
    if (binomial(code.N, code.K) <= 10000 && !is_mds(code, f))
        throw std::logic_error("generator is not MDS");
    return code;
}

} // namespace

MdsCode rs_code(int N, int K, const Field& f) {
    if (K < 1 || K >= N) throw std::invalid_argument("need 1 <= K < N");
    if (static_cast<Elem>(N) > f.modulus())
        throw std::invalid_argument("field too small for distinct evaluation points");
    MdsCode code;
    code.N = N;
    code.K = K;
    code.generator = Mat(K, N);
    for (int j = 0; j < N; ++j) {
        Elem p = static_cast<Elem>(j) % f.modulus();
        for (int i = 0; i < K; ++i) code.generator.at(i, j) = f.pow(p, i);
    }
    return checked(std::move(code), f);
}

MdsCode neg_pair_code(const Field& f) {
    MdsCode code;
    code.N = 2;
    code.K = 1;
    code.generator = Mat(1, 2);
    code.generator.at(0, 0) = 1;
    code.generator.at(0, 1) = f.neg(1);
    return checked(std::move(code), f);
}

MdsCode parity_code(const Field& f) {
    MdsCode code;
    code.N = 3;
    code.K = 2;
    code.generator = Mat(2, 3);
    code.generator.at(0, 0) = 1;
    code.generator.at(0, 2) = 1;
    code.generator.at(1, 1) = 1;
    code.generator.at(1, 2) = 1;
    return checked(std::move(code), f);
}

int Partition::s() const {
    int total = 0;
    for (const auto& p : parts) total += static_cast<int>(p.size());
    return total;
}

int Partition::part_of(int server) const {
    for (int j = 0; j < N(); ++j)
        if (std::binary_search(parts[j].begin(), parts[j].end(), server)) return j + 1;
    throw std::invalid_argument("server not covered by partition");
}

Partition make_partition(int s, std::vector<std::vector<int>> parts) {
    Partition p;
    std::vector<bool> seen(s + 1, false);
    int covered = 0;
    for (auto& part : parts) {
        if (part.empty()) throw std::invalid_argument("partition has an empty group");
        std::sort(part.begin(), part.end());
        for (int v : part) {
            if (v < 1 || v > s) throw std::invalid_argument("partition server out of range");
            if (seen[v]) throw std::invalid_argument("partition groups overlap");
            seen[v] = true;
            ++covered;
        }
        p.parts.push_back(std::move(part));
    }
    if (covered != s) throw std::invalid_argument("partition does not cover all servers");
    return p;
}

Partition block_partition(int s, int N) {
    if (N < 1 || s % N != 0) throw std::invalid_argument("block partition needs N dividing s");
    std::vector<std::vector<int>> parts(N);
    int size = s / N;
    for (int j = 0; j < N; ++j)
        for (int k = 1; k <= size; ++k) parts[j].push_back(j * size + k);
    return make_partition(s, std::move(parts));
}

CodedLayout parity_layout(int s) {
    if (s < 3 || s % 3 != 0) throw std::invalid_argument("layout needs s divisible by 3");
    int m = s / 3;
    CodedLayout layout;
    layout.partition = block_partition(s, 3);
    for (int u = 1; u <= m; ++u)
        for (int k = 1; k <= m; ++k) {
            int second = m + k;
            int third = 2 * m + ((k + u - 2) % m) + 1;
            layout.hyperedges.push_back({u, second, third});
        }
    return layout;
}

std::vector<std::vector<int>> assignment_from_hyperedges(
    const Partition& partition, const std::vector<std::vector<int>>& hyperedges) {
    std::vector<std::vector<int>> assignment;
    for (const auto& e : hyperedges) {
        std::vector<int> by_part(partition.N(), 0);
        for (int v : e) {
            int j = partition.part_of(v);
            if (by_part[j - 1] != 0)
                throw std::invalid_argument("hyperedge has two servers in one group");
            by_part[j - 1] = v;
        }
        for (int v : by_part)
            if (v == 0) throw std::invalid_argument("hyperedge misses a group");
        assignment.push_back(std::move(by_part));
    }
    return assignment;
}

CodedSystem encode_and_disperse(const Dataset& X, const MdsCode& code,
                                const Partition& partition,
                                const std::vector<std::vector<int>>& assignment) {
    const Field& f = X.field;
    if (partition.s() <= 0) throw std::invalid_argument("empty partition");
    if (X.f % code.K != 0) throw std::invalid_argument("code dimension must divide file length");
    if (static_cast<int>(assignment.size()) != X.n)
        throw std::invalid_argument("assignment size does not match file count");

    CodedSystem sys{f, code, partition, {}, assignment, X.n, X.f, X.f / code.K, {}};
    int s = partition.s();
    sys.servers.resize(s);
    for (int j = 1; j <= s; ++j) {
        sys.servers[j - 1].server = j;
        sys.servers[j - 1].symbol_len = static_cast<std::size_t>(sys.rows);
    }

    std::vector<std::vector<int>> hyperedges;
    for (int i = 1; i <= X.n; ++i) {
        const auto& where = assignment[i - 1];
        if (static_cast<int>(where.size()) != code.N)
            throw std::invalid_argument("assignment row must name one server per group");
        // Reshape row-major into (f/K) x K and encode.
        Mat msg(sys.rows, code.K);
        for (int r = 0; r < sys.rows; ++r)
            for (int k = 0; k < code.K; ++k) msg.at(r, k) = X.file(i)[r * code.K + k];
        Mat cw = mat_mul(f, msg, code.generator); // (f/K) x N
        std::vector<int> edge;
        for (int j = 1; j <= code.N; ++j) {
            int server = where[j - 1];
            if (partition.part_of(server) != j)
                throw std::invalid_argument("assignment places a symbol outside its group");
            std::vector<Elem> sym(sys.rows);
            for (int r = 0; r < sys.rows; ++r) sym[r] = cw.at(r, j - 1);
            sys.servers[server - 1].holdings[i] = std::move(sym);
            edge.push_back(server);
        }
        hyperedges.push_back(std::move(edge));
    }
    sys.hypergraph = from_edge_list(s, std::move(hyperedges));
    return sys;
}

RoundPlan plan_rounds(int N, int K) {
    if (K < 1 || K >= N) throw std::invalid_argument("need 1 <= K < N");
    int nk = N - K;
    long long l = std::lcm(static_cast<long long>(K), static_cast<long long>(nk));
    RoundPlan plan;
    plan.r = static_cast<int>(l / nk);
    plan.b = static_cast<int>(l / K);
    plan.J.assign(plan.r, std::vector<std::vector<int>>(plan.b));
    int wrap = std::max(K, nk);
    int pos = 0;   // next position, 0-based within [wrap]
    int round = 0; // 0-based
    int cap = nk;  // remaining capacity of current round
    for (int slot = 0; slot < plan.b; ++slot) {
        int need = K;
        while (need > 0) {
            if (cap == 0) {
                ++round;
                cap = nk;
            }
            int take = std::min(need, cap);
            for (int t = 0; t < take; ++t) {
                plan.J[round][slot].push_back(pos + 1);
                pos = (pos + 1) % wrap;
            }
            cap -= take;
            need -= take;
        }
    }
    for (auto& per_round : plan.J)
        for (auto& set : per_round) std::sort(set.begin(), set.end());
    return plan;
}

CodedSecret sample_coded_secret(int n, int s, const Field& f, Rng& rng) {
    CodedSecret sec;
    for (int i = 0; i < n; ++i) sec.alpha.push_back(f.sample_nonzero(rng));
    for (int v = 0; v < s; ++v) sec.gamma.push_back(f.sample_nonzero(rng));
    sec.h = f.sample_h(rng);
    return sec;
}

namespace {

void check_request(const CodedSystem& sys, const RoundPlan& plan, const std::vector<int>& phis) {
    if (static_cast<int>(phis.size()) != plan.b)
        throw std::invalid_argument("need exactly one requested file per schedule slot");
    std::set<int> distinct(phis.begin(), phis.end());
    if (distinct.size() != phis.size()) throw std::invalid_argument("requested files must be distinct");
    for (int phi : phis)
        if (phi < 1 || phi > sys.n) throw std::invalid_argument("requested file index out of range");
}

bool targeted(const RoundPlan& plan, const std::vector<int>& phis, int round, int file, int m) {
    for (int j = 0; j < plan.b; ++j)
        if (phis[j] == file &&
            std::binary_search(plan.J[round - 1][j].begin(), plan.J[round - 1][j].end(), m))
            return true;
    return false;
}

} // namespace

CodedRound coded_round(const CodedSystem& sys, const RoundPlan& plan, int round,
                       const std::vector<int>& phis, const CodedSecret& secret) {
    check_request(sys, plan, phis);
    if (round < 1 || round > plan.r) throw std::invalid_argument("round out of range");
    const Field& f = sys.field;
    CodedRound out;
    out.secret = secret;
    int s = sys.partition.s();
    for (int j = 1; j <= s; ++j) {
        int m = sys.partition.part_of(j);
        SparseQuery query;
        for (const auto& [file, sym] : sys.servers[j - 1].holdings) {
            (void)sym;
            Elem coeff = f.mul(secret.gamma[j - 1], secret.alpha[file - 1]);
            if (targeted(plan, phis, round, file, m)) coeff = f.mul(coeff, secret.h);
            query.push_back({file, coeff});
        }
        out.answers.push_back(answer(sys.servers[j - 1], query, f));
        out.queries.push_back(std::move(query));
    }
    return out;
}

std::vector<std::vector<Elem>> coded_reconstruct(const CodedSystem& sys, const RoundPlan& plan,
                                                 const std::vector<int>& phis,
                                                 const std::vector<CodedRound>& rounds) {
    check_request(sys, plan, phis);
    if (static_cast<int>(rounds.size()) != plan.r)
        throw std::invalid_argument("need one transcript per round");
    const Field& f = sys.field;
    const MdsCode& code = sys.code;
    // collected[j][m-1] = codeword symbol m of file phis[j], once recovered
    std::vector<std::vector<std::vector<Elem>>> collected(
        plan.b, std::vector<std::vector<Elem>>(code.N));

    for (int round = 1; round <= plan.r; ++round) {
        const CodedRound& tr = rounds[round - 1];
        const CodedSecret& sec = tr.secret;
        // Column aggregates: observed[m-1] = sum over the part of gamma^-1 * answer.
        std::vector<std::vector<Elem>> observed(code.N, std::vector<Elem>(sys.rows, 0));
        for (int j = 1; j <= sys.partition.s(); ++j) {
            int m = sys.partition.part_of(j);
            Elem ginv = f.inv(sec.gamma[j - 1]);
            for (int r = 0; r < sys.rows; ++r)
                observed[m - 1][r] =
                    f.add(observed[m - 1][r], f.mul(ginv, tr.answers[j - 1][r]));
        }
        // Untouched positions: those outside every J set of this round.
        std::vector<bool> touched(code.N + 1, false);
        for (int j = 0; j < plan.b; ++j)
            for (int m : plan.J[round - 1][j]) touched[m] = true;
        std::vector<int> intact;
        for (int m = 1; m <= code.N; ++m)
            if (!touched[m]) intact.push_back(m);
        if (static_cast<int>(intact.size()) != code.K)
            throw std::runtime_error("schedule does not leave K untouched positions");
        // Erasure-decode the aggregate codeword matrix Y row by row.
        Mat dec = inverse_fq(f, generator_columns(code, intact));
        std::vector<std::vector<Elem>> y(code.N, std::vector<Elem>(sys.rows));
        for (int r = 0; r < sys.rows; ++r) {
            std::vector<Elem> seen(code.K);
            for (int c = 0; c < code.K; ++c) seen[c] = observed[intact[c] - 1][r];
            std::vector<Elem> msg = mat_vec(f, Mat{}, {}); // placeholder, replaced below
            (void)msg;
            // msg = seen * dec  (row vector times matrix)
            std::vector<Elem> m_row(code.K, 0);
            for (int c = 0; c < code.K; ++c)
                for (int k = 0; k < code.K; ++k)
                    m_row[k] = f.add(m_row[k], f.mul(seen[c], dec.at(c, k)));
            for (int m = 1; m <= code.N; ++m) {
                Elem v = 0;
                for (int k = 0; k < code.K; ++k)
                    v = f.add(v, f.mul(m_row[k], code.generator.at(k, m - 1)));
                y[m - 1][r] = v;
            }
        }
        // Divide the offsets out of the touched positions.
        for (int j = 0; j < plan.b; ++j) {
            Elem scale = f.mul(f.sub(sec.h, 1), sec.alpha[phis[j] - 1]);
            if (scale == 0) throw std::logic_error("corrupted secret: offset scale vanished");
            Elem sinv = f.inv(scale);
            for (int m : plan.J[round - 1][j]) {
                std::vector<Elem> sym(sys.rows);
                for (int r = 0; r < sys.rows; ++r)
                    sym[r] = f.mul(sinv, f.sub(observed[m - 1][r], y[m - 1][r]));
                if (!collected[j][m - 1].empty())
                    throw std::runtime_error("schedule recovered a position twice");
                collected[j][m - 1] = std::move(sym);
            }
        }
    }

    // Decode each requested file from its K collected codeword symbols.
    std::vector<std::vector<Elem>> files;
    for (int j = 0; j < plan.b; ++j) {
        std::vector<int> positions;
        for (int m = 1; m <= code.N; ++m)
            if (!collected[j][m - 1].empty()) positions.push_back(m);
        if (static_cast<int>(positions.size()) != code.K)
            throw std::runtime_error("schedule did not recover K positions of a file");
        Mat dec = inverse_fq(f, generator_columns(code, positions));
        std::vector<Elem> file(static_cast<std::size_t>(sys.f));
        for (int r = 0; r < sys.rows; ++r) {
            for (int k = 0; k < code.K; ++k) {
                Elem v = 0;
                for (int c = 0; c < code.K; ++c)
                    v = f.add(v, f.mul(collected[j][positions[c] - 1][r], dec.at(c, k)));
                file[static_cast<std::size_t>(r) * code.K + k] = v;
            }
        }
        files.push_back(std::move(file));
    }
    return files;
}

CodedTranscript coded_retrieve(const CodedSystem& sys, const std::vector<int>& phis, Rng& rng,
                               bool reuse_secret) {
    CodedTranscript t;
    t.plan = plan_rounds(sys.code.N, sys.code.K);
    check_request(sys, t.plan, phis);
    CodedSecret first;
    for (int round = 1; round <= t.plan.r; ++round) {
        CodedSecret sec;
        if (reuse_secret && round > 1) sec = first;
        else sec = sample_coded_secret(sys.n, sys.partition.s(), sys.field, rng);
        if (round == 1) first = sec;
        t.rounds.push_back(coded_round(sys, t.plan, round, phis, sec));
        for (const auto& q : t.rounds.back().queries) t.upload += q.size();
        for (const auto& a : t.rounds.back().answers) t.download += a.size();
    }
    t.files = coded_reconstruct(sys, t.plan, phis, t.rounds);
    t.rate = Rational(static_cast<std::int64_t>(t.plan.b) * sys.f,
                      static_cast<std::int64_t>(t.download));
    return t;
}

Rational storage_overhead(const CodedSystem& sys) { return Rational(sys.code.N, sys.code.K); }

std::map<std::vector<Elem>, long long> coded_view_distribution(
    const CodedSystem& sys, const RoundPlan& plan, int round, const std::vector<int>& phis,
    const std::vector<int>& S, long long budget) {
    check_request(sys, plan, phis);
    if (round < 1 || round > plan.r) throw std::invalid_argument("round out of range");
    const Field& f = sys.field;
    Elem q = f.modulus();
    std::vector<int> servers(S);
    std::sort(servers.begin(), servers.end());
    servers.erase(std::unique(servers.begin(), servers.end()), servers.end());

    // Files S observes, and the free coordinates: gamma over S, alpha over
    // those files, and h.
    std::set<int> files;
    for (int srv : servers)
        for (const auto& [file, sym] : sys.servers[srv - 1].holdings) {
            (void)sym;
            files.insert(file);
        }
    std::vector<int> file_list(files.begin(), files.end());
    long long total = q - 2;
    for (std::size_t i = 0; i < servers.size() + file_list.size(); ++i) {
        total *= static_cast<long long>(q - 1);
        if (total > budget) throw std::runtime_error("view enumeration exceeds budget");
    }

    std::map<int, int> alpha_slot;
    for (std::size_t i = 0; i < file_list.size(); ++i) alpha_slot[file_list[i]] = static_cast<int>(i);

    std::size_t free_count = servers.size() + file_list.size();
    std::vector<Elem> free(free_count, 1); // nonzero coordinates, values 1..q-1
    Elem h = 2;
    std::map<std::vector<Elem>, long long> counts;
    for (;;) {
        std::vector<Elem> view;
        for (std::size_t si = 0; si < servers.size(); ++si) {
            int srv = servers[si];
            int m = sys.partition.part_of(srv);
            for (const auto& [file, sym] : sys.servers[srv - 1].holdings) {
                (void)sym;
                Elem coeff = f.mul(free[si], free[servers.size() + alpha_slot[file]]);
                if (targeted(plan, phis, round, file, m)) coeff = f.mul(coeff, h);
                view.push_back(coeff);
            }
        }
        ++counts[view];
        // Odometer: h fastest, then the nonzero coordinates.
        if (++h < q) continue;
        h = 2;
        std::size_t pos = 0;
        while (pos < free_count && ++free[pos] == q) free[pos++] = 1;
        if (pos == free_count) break;
    }
    return counts;
}

bool verify_coded_privacy(const CodedSystem& sys, const std::vector<int>& S, long long budget) {
    if (polychromatic_cycle_exists(to_colored(sys.hypergraph), S))
        throw std::invalid_argument("colluding set contains a polychromatic cycle");
    RoundPlan plan = plan_rounds(sys.code.N, sys.code.K);
    // All ordered tuples of b distinct files.
    std::vector<std::vector<int>> tuples;
    std::vector<int> current;
    std::vector<bool> used(sys.n + 1, false);
    auto build = [&](auto&& self, int depth) -> void {
        if (depth == plan.b) {
            tuples.push_back(current);
            return;
        }
        for (int phi = 1; phi <= sys.n; ++phi) {
            if (used[phi]) continue;
            used[phi] = true;
            current.push_back(phi);
            self(self, depth + 1);
            current.pop_back();
            used[phi] = false;
        }
    };
    build(build, 0);
    if (tuples.empty()) throw std::invalid_argument("no request tuples to compare");
    for (int round = 1; round <= plan.r; ++round) {
        auto reference = coded_view_distribution(sys, plan, round, tuples.front(), S, budget);
        for (std::size_t i = 1; i < tuples.size(); ++i)
            if (coded_view_distribution(sys, plan, round, tuples[i], S, budget) != reference)
                return false;
    }
    return true;
}

} // namespace gpir
