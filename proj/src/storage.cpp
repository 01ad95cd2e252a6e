#include "gpir/storage.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gpir {

Dataset random_dataset(int n, int f, const Field& field, Rng& rng) {
    if (n < 1 || f < 1) throw std::invalid_argument("dataset needs n >= 1 and f >= 1");
    Dataset X(field, n, f);
    for (auto& row : X.rows)
        for (auto& x : row) x = field.sample_uniform(rng);
    return X;
}

std::vector<ServerContents> disperse(const StorageGraph& g, const Dataset& X) {
    if (g.n() != X.n) throw std::invalid_argument("disperse: file count does not match edge count");
    std::vector<ServerContents> servers(g.s);
    for (int j = 1; j <= g.s; ++j) {
        servers[j - 1].server = j;
        servers[j - 1].symbol_len = static_cast<std::size_t>(X.f);
    }
    for (int i = 1; i <= X.n; ++i)
        for (int v : g.edges[i - 1]) servers[v - 1].holdings[i] = X.file(i);
    return servers;
}

Dataset read_dataset(std::istream& in) {
    std::string line;
    auto next_tokens = [&](std::vector<long long>& out) {
        out.clear();
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            long long v;
            while (ls >> v) out.push_back(v);
            if (!out.empty()) return true;
        }
        return false;
    };
    std::vector<long long> toks;
    if (!next_tokens(toks) || toks.size() != 3)
        throw std::invalid_argument("dataset file: expected header line \"n f q\"");
    int n = static_cast<int>(toks[0]);
    int f = static_cast<int>(toks[1]);
    Field field = make_field(static_cast<Elem>(toks[2]));
    Dataset X(field, n, f);
    for (int i = 0; i < n; ++i) {
        if (!next_tokens(toks) || static_cast<int>(toks.size()) != f)
            throw std::invalid_argument("dataset file: bad row");
        for (int j = 0; j < f; ++j) X.rows[i][j] = field.element(toks[j]);
    }
    return X;
}

void write_dataset(std::ostream& out, const Dataset& X) {
    out << X.n << ' ' << X.f << ' ' << X.field.modulus() << '\n';
    for (const auto& row : X.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << '\n';
    }
}

Dataset load_dataset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);
    return read_dataset(in);
}

} // namespace gpir
