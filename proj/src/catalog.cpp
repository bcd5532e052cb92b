#include "apnext/catalog.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace apnext {

FunctionSpec FunctionSpec::gold(unsigned t) {
    FunctionSpec s;
    s.family = Family::gold;
    s.t = t;
    return s;
}

FunctionSpec FunctionSpec::switched_cube(std::vector<MuTerm> mu) {
    FunctionSpec s;
    s.family = Family::switched_cube;
    s.mu = std::move(mu);
    return s;
}

FunctionSpec FunctionSpec::monomial(std::uint64_t d) {
    FunctionSpec s;
    s.family = Family::monomial;
    s.d = d;
    return s;
}

FunctionSpec FunctionSpec::file(std::string path) {
    FunctionSpec s;
    s.family = Family::file;
    s.path = std::move(path);
    return s;
}

namespace {

unsigned gcd_u(unsigned a, unsigned b) {
    while (b) { unsigned t = a % b; a = b; b = t; }
    return a;
}

}  // namespace

VectorialFunction instantiate(const FieldCtx& ctx, const FunctionSpec& spec) {
    switch (spec.family) {
        case FunctionSpec::Family::gold: {
            if (spec.t < 1 || spec.t >= ctx.n())
                throw std::invalid_argument("gold exponent t must be in [1, n-1]");
            if (gcd_u(spec.t, ctx.n()) != 1)
                throw std::invalid_argument("gold family requires gcd(t, n) = 1, got t=" +
                                            std::to_string(spec.t) + " n=" + std::to_string(ctx.n()));
            return from_monomial(ctx, (std::uint64_t{1} << spec.t) + 1);
        }
        case FunctionSpec::Family::switched_cube: {
            for (const MuTerm& term : spec.mu)
                if (std::popcount(term.e) > 2)
                    throw std::invalid_argument("mu exponent " + std::to_string(term.e) +
                                                " has 2-weight > 2 (mu must be quadratic)");
            std::vector<Elem> t(ctx.size());
            for (std::uint32_t x = 0; x < ctx.size(); ++x) {
                Elem v = ctx.pow(x, 3);
                unsigned bit = 0;
                for (const MuTerm& term : spec.mu)
                    bit ^= ctx.trace(ctx.mul(term.c, ctx.pow(x, static_cast<std::int64_t>(term.e))));
                t[x] = v ^ bit;
            }
            return VectorialFunction(ctx.n(), ctx.n(), std::move(t));
        }
        case FunctionSpec::Family::monomial:
            return from_monomial(ctx, spec.d);
        case FunctionSpec::Family::file:
            return read_table(spec.path);
    }
    throw std::logic_error("unreachable");
}

std::string elem_to_hex(Elem v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

Elem elem_from_hex(const std::string& s) {
    std::string t = s;
    if (t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) t = t.substr(2);
    if (t.empty()) throw std::invalid_argument("empty hex value");
    std::size_t pos = 0;
    unsigned long v;
    try {
        v = std::stoul(t, &pos, 16);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a hex value: '" + s + "'");
    }
    if (pos != t.size()) throw std::invalid_argument("not a hex value: '" + s + "'");
    if (v > 0xFFFFFFFFul) throw std::invalid_argument("hex value out of range: '" + s + "'");
    return static_cast<Elem>(v);
}

VectorialFunction parse_table(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("empty truth-table file");
    unsigned n = 0, m = 0;
    char c1 = 0, c2 = 0, c3 = 0, c4 = 0;
    std::istringstream hs(header);
    hs >> c1 >> c2 >> n >> c3 >> c4 >> m;
    // header chars: 'n' '=' <int> 'm' '=' <int>
    if (!hs || c1 != 'n' || c2 != '=' || c3 != 'm' || c4 != '=' || n == 0 || m == 0 || n > 31 ||
        m > 31)
        throw std::invalid_argument("bad truth-table header: '" + header + "'");
    std::vector<Elem> table;
    table.reserve(std::size_t{1} << n);
    std::string tok;
    while (in >> tok) {
        Elem v = elem_from_hex(tok);
        if (v >> m)
            throw std::invalid_argument("table entry " + tok + " out of range for m=" +
                                        std::to_string(m));
        table.push_back(v);
    }
    if (table.size() != (std::size_t{1} << n))
        throw std::invalid_argument("expected " + std::to_string(std::size_t{1} << n) +
                                    " entries, got " + std::to_string(table.size()));
    return VectorialFunction(n, m, std::move(table));
}

VectorialFunction read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return parse_table(in);
}

void print_table(std::ostream& out, const VectorialFunction& f) {
    out << "n=" << f.n_in << " m=" << f.n_out << "\n";
    for (std::size_t i = 0; i < f.table.size(); ++i) {
        out << elem_to_hex(f.table[i]);
        out << ((i % 16 == 15 || i + 1 == f.table.size()) ? '\n' : ' ');
    }
}

void write_table(const std::string& path, const VectorialFunction& f) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    print_table(out, f);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace apnext
