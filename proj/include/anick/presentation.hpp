#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace anick {

using Int = std::int64_t;

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ")"),
          line(line_), col(col_) {}
};

struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& msg) : std::runtime_error(msg) {}
};

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& name) const;
    int arrow_index(const std::string& name) const;
    int source(int arrow) const { return arrows[arrow].src; }
    int target(int arrow) const { return arrows[arrow].tgt; }
};

// A composable word of arrows. Weight is the length of the word; the empty
// path at a vertex is never a Monomial (it lives in algebra elements only).
struct Monomial {
    std::vector<int> word;

    int weight() const { return static_cast<int>(word.size()); }
    bool operator==(const Monomial& o) const { return word == o.word; }
    bool operator!=(const Monomial& o) const { return word != o.word; }
};

// Degree-lexicographic order induced by the declared arrow order. This is
// the canonical listing order everywhere, so operator< is deglex.
bool deglex_less(const Monomial& a, const Monomial& b);
inline bool operator<(const Monomial& a, const Monomial& b) { return deglex_less(a, b); }

Monomial concat(const Monomial& a, const Monomial& b);
Monomial subword(const Monomial& m, int begin, int end);  // [begin, end), 0-based

struct Presentation {
    Quiver quiver;
    std::vector<Monomial> relations;

    int source(const Monomial& m) const { return quiver.source(m.word.front()); }
    int target(const Monomial& m) const { return quiver.target(m.word.back()); }
    bool composable(const Monomial& m) const;
    bool composable_pair(const Monomial& a, const Monomial& b) const {
        return target(a) == source(b);
    }
    int max_relation_weight() const;
};

// Parses the textual input format:
//   vertex <id>[, <id>...]; arrows <name>[:<src>-><tgt>][, ...]; relations <word>[, ...]
// Words are whitespace-separated arrow names, `#` starts a comment, and
// statements may be separated by `;` or newlines. Omitting the vertex line
// declares a single implicit vertex.
Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::string& path);

bool is_normal(const Monomial& m, const Presentation& p);

// uv = 0 minimally: uv is reducible and u v' is normal for every proper
// prefix v' of v. Requires u, v normal and composable.
bool zero_minimally(const Monomial& u, const Monomial& v, const Presentation& p);

// Normal monomials of weight 1..max_weight; entry w-1 lists weight w in
// deglex order.
std::vector<std::vector<Monomial>> normal_basis(const Presentation& p, int max_weight);

}  // namespace anick
