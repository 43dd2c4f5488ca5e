#pragma once

#include "fockcorr/qexp.hpp"

#include <map>
#include <string>
#include <vector>

namespace fockcorr {

using Partition = std::vector<long>; // weakly decreasing, trailing zeros allowed

long size(const Partition& p);
long norm2(const Partition& p);
Partition trim(Partition p);
Partition transpose(const Partition& p);
bool is_partition(const Partition& p);
bool is_symmetric(const Partition& p);
long rank(const Partition& p); // #{i : lambda_i >= i}
// All partitions of n, each listed without trailing zeros.
std::vector<Partition> partitions_of(long n);

// Frobenius coordinates, each entry stored as twice its (half-integer) value.
struct Frobenius {
    std::vector<Half> p, q;
    bool operator==(const Frobenius&) const = default;
};
Frobenius frobenius(const Partition& p);
Partition from_frobenius(const Frobenius& f);

// Diagonal hook lengths of a symmetric partition: an odd strict partition.
Partition sym_to_osp(const Partition& p);
Partition osp_to_sym(const Partition& mu);
bool is_odd_strict(const Partition& mu);
// Odd strict partitions of n.
std::vector<Partition> odd_strict_partitions(long n);

enum class Algebra { A, B, C, D };
char algebra_char(Algebra a);
Algebra parse_algebra(const std::string& s);

// A highest-weight label. level2 is twice the level; rank l = level2 / 2.
// parts holds m_1..m_l; for spin labels the weight is m + (1/2, ..., 1/2).
struct ModuleLabel {
    Algebra algebra = Algebra::D;
    long level2 = 2;
    Partition parts;
    bool det = false;
    bool spin = false;

    int rank() const { return static_cast<int>(level2 / 2); }
    bool half_level() const { return level2 % 2 != 0; }
    // Weight vector, each entry doubled.
    std::vector<Half> weight2() const;
    QExp weight_energy() const; // |weight|^2 / 2
    void validate() const;      // throws std::invalid_argument
    std::string str() const;
    bool operator==(const ModuleLabel&) const = default;
};

// Labels whose correlators can reach below q^bound. Orthogonal labels that
// share a correlator (lambda and lambda (x) det) are listed once, without det.
std::vector<ModuleLabel> enumerate_labels(Algebra a, long level2, QExp bound);

// Coefficients of the fundamental weights Lambda_k of the infinite-rank algebra.
std::map<long, long> fundamental_weight_label(const ModuleLabel& label);
// Level read off the fundamental-weight expansion, doubled.
long level2_of(Algebra a, const std::map<long, long>& lambda);

} // namespace fockcorr
