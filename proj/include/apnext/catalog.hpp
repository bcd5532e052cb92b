#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apnext/field.hpp"
#include "apnext/vecfun.hpp"

namespace apnext {

/// One summand tr(c * x^e) of a trace-form Boolean function.
struct MuTerm {
    Elem c = 0;
    std::uint64_t e = 0;
};

/// Constructor spec for the built-in function families.
struct FunctionSpec {
    enum class Family { gold, switched_cube, monomial, file };

    Family family = Family::monomial;
    unsigned t = 0;              // gold: x^(2^t+1), gcd(t, n) = 1
    std::uint64_t d = 0;         // monomial: x^d
    std::vector<MuTerm> mu;      // switched_cube: x^3 + sum tr(c_i x^(e_i)), wt(e_i) <= 2
    std::string path;            // file: truth table to load

    static FunctionSpec gold(unsigned t);
    static FunctionSpec switched_cube(std::vector<MuTerm> mu);
    static FunctionSpec monomial(std::uint64_t d);
    static FunctionSpec file(std::string path);
};

/// Builds the truth table. Throws std::invalid_argument on gcd(t, n) != 1,
/// a non-quadratic mu exponent, or a malformed file.
VectorialFunction instantiate(const FieldCtx& ctx, const FunctionSpec& spec);

/// Text format: first line "n=<int> m=<int>", then 2^n whitespace-separated
/// hexadecimal outputs in index order.
VectorialFunction read_table(const std::string& path);
void write_table(const std::string& path, const VectorialFunction& f);

VectorialFunction parse_table(std::istream& in);
void print_table(std::ostream& out, const VectorialFunction& f);

std::string elem_to_hex(Elem v);
Elem elem_from_hex(const std::string& s);

}  // namespace apnext
