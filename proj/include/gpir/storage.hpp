#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gpir/field.hpp"
#include "gpir/graphs.hpp"

namespace gpir {

// n files of f symbols each over a prime field.
struct Dataset {
    Field field;
    int n = 0;
    int f = 0;
    std::vector<std::vector<Elem>> rows; // rows[i-1] = file i

    Dataset(Field fld, int n_, int f_) : field(fld), n(n_), f(f_), rows(n_, std::vector<Elem>(f_, 0)) {}
    const std::vector<Elem>& file(int i) const { return rows[i - 1]; }
    std::vector<Elem>& file(int i) { return rows[i - 1]; }
};

Dataset random_dataset(int n, int f, const Field& field, Rng& rng);

// What one server holds: file index -> stored vector (a full replica, or a
// codeword symbol in coded mode).
struct ServerContents {
    int server = 0; // 1-based
    std::size_t symbol_len = 0;
    std::map<int, std::vector<Elem>> holdings;

    bool holds(int file) const { return holdings.count(file) != 0; }
};

// Server j receives file i iff j is a vertex of hyperedge i.
std::vector<ServerContents> disperse(const StorageGraph& g, const Dataset& X);

// Text format: header "n f q", then n lines of f integers.
Dataset read_dataset(std::istream& in);
void write_dataset(std::ostream& out, const Dataset& X);
Dataset load_dataset_file(const std::string& path);

} // namespace gpir
