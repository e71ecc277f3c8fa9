#include "anick/format.hpp"

#include <sstream>

namespace anick {

namespace {

bool single_char_names(const Presentation& p) {
    for (const auto& a : p.quiver.arrows)
        if (a.name.size() != 1) return false;
    return true;
}

}  // namespace

std::string render_monomial(const Monomial& m, const Presentation& p) {
    std::ostringstream os;
    if (single_char_names(p)) {
        size_t i = 0;
        while (i < m.word.size()) {
            size_t j = i;
            while (j < m.word.size() && m.word[j] == m.word[i]) ++j;
            os << p.quiver.arrows[m.word[i]].name;
            if (j - i > 1) os << (j - i);
            i = j;
        }
    } else {
        for (size_t i = 0; i < m.word.size(); ++i) {
            if (i) os << '.';
            os << p.quiver.arrows[m.word[i]].name;
        }
    }
    return os.str();
}

std::string render_chain(const Chain& c, const Presentation& p) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < c.splitting.size(); ++i) {
        if (i) os << '|';
        os << render_monomial(c.splitting[i], p);
    }
    os << ']';
    return os.str();
}

std::string render_bar_term(const BarTerm& t, const Presentation& p) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < t.segs.size(); ++i) {
        if (i) os << '|';
        os << render_monomial(t.segs[i], p);
    }
    os << ']';
    return os.str();
}

std::string render_path(const PathWord& w, const Presentation& p) {
    if (w.trivial()) return "e_" + p.quiver.vertices[w.src];
    return render_monomial(Monomial{w.word}, p);
}

std::string render_alg_element(const AlgElement& e, const Presentation& p) {
    if (e.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e.terms) {
        if (!first) os << ' ';
        if (c >= 0 && !first) os << "+ ";
        if (c < 0) os << (first ? "-" : "- ");
        Int a = c < 0 ? -c : c;
        if (a != 1) os << a << '*';
        os << render_path(w, p);
        first = false;
    }
    return os.str();
}

std::string render_tuple(const std::vector<Chain>& parts, const Presentation& p) {
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << "(x)";
        os << render_chain(parts[i], p);
    }
    return os.str();
}

std::string render_tensor_element(const TensorElement& e, const Presentation& p) {
    if (e.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : e.terms) {
        if (!first) os << ' ';
        if (c >= 0 && !first) os << "+ ";
        if (c < 0) os << (first ? "-" : "- ");
        Int a = c < 0 ? -c : c;
        if (a != 1) os << a << '*';
        os << render_tuple(t, p);
        first = false;
    }
    return os.str();
}

std::string presentation_digest(const Presentation& p) {
    std::ostringstream os;
    for (const auto& v : p.quiver.vertices) os << 'v' << v << ';';
    for (const auto& a : p.quiver.arrows)
        os << 'a' << a.name << ':' << a.src << '>' << a.tgt << ';';
    for (const auto& r : p.relations) {
        os << 'r';
        for (int x : r.word) os << x << '.';
        os << ';';
    }
    std::string s = os.str();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

}  // namespace anick
