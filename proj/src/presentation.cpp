#include "anick/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace anick {

int Quiver::vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<int>(i);
    return -1;
}

int Quiver::arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<int>(i);
    return -1;
}

bool deglex_less(const Monomial& a, const Monomial& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
}

Monomial concat(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    m.word.insert(m.word.end(), b.word.begin(), b.word.end());
    return m;
}

Monomial subword(const Monomial& m, int begin, int end) {
    Monomial s;
    s.word.assign(m.word.begin() + begin, m.word.begin() + end);
    return s;
}

bool Presentation::composable(const Monomial& m) const {
    for (size_t i = 0; i + 1 < m.word.size(); ++i)
        if (quiver.target(m.word[i]) != quiver.source(m.word[i + 1])) return false;
    return true;
}

int Presentation::max_relation_weight() const {
    int m = 0;
    for (const auto& r : relations) m = std::max(m, r.weight());
    return m;
}

namespace {

struct Token {
    std::string text;
    int line;
    int col;
};

enum class Kind { Word, Comma, Colon, ArrowOp, Sep, End };

struct Lexer {
    std::vector<Token> toks;
    std::vector<Kind> kinds;
    size_t pos = 0;

    explicit Lexer(const std::string& text) {
        int line = 1, col = 1;
        size_t i = 0;
        auto push = [&](Kind k, std::string s, int l, int c) {
            toks.push_back({std::move(s), l, c});
            kinds.push_back(k);
        };
        bool in_comment = false;
        while (i < text.size()) {
            char ch = text[i];
            if (ch == '\n') {
                in_comment = false;
                push(Kind::Sep, "\n", line, col);
                ++line;
                col = 1;
                ++i;
                continue;
            }
            if (ch == '#') in_comment = true;
            if (in_comment) {
                ++i;
                ++col;
                continue;
            }
            if (ch == ' ' || ch == '\t' || ch == '\r') {
                ++i;
                ++col;
                continue;
            }
            if (ch == ';') {
                push(Kind::Sep, ";", line, col);
                ++i;
                ++col;
                continue;
            }
            if (ch == ',') {
                push(Kind::Comma, ",", line, col);
                ++i;
                ++col;
                continue;
            }
            if (ch == ':') {
                push(Kind::Colon, ":", line, col);
                ++i;
                ++col;
                continue;
            }
            if (ch == '-' && i + 1 < text.size() && text[i + 1] == '>') {
                push(Kind::ArrowOp, "->", line, col);
                i += 2;
                col += 2;
                continue;
            }
            if (ch == '-' || ch == '>') throw ParseError("unexpected character", line, col);
            int start_col = col;
            std::string word;
            while (i < text.size()) {
                char c = text[i];
                if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ';' || c == ',' ||
                    c == ':' || c == '#' || c == '-' || c == '>')
                    break;
                word += c;
                ++i;
                ++col;
            }
            push(Kind::Word, std::move(word), line, start_col);
        }
        push(Kind::End, "", line, col);
    }

    Kind peek() const { return kinds[pos]; }
    const Token& tok() const { return toks[pos]; }
    Token take() { return toks[pos++]; }
    void skip_seps() {
        while (kinds[pos] == Kind::Sep) ++pos;
    }
};

bool contains_as_subword(const std::vector<int>& w, const std::vector<int>& sub) {
    if (sub.size() > w.size()) return false;
    for (size_t i = 0; i + sub.size() <= w.size(); ++i)
        if (std::equal(sub.begin(), sub.end(), w.begin() + i)) return true;
    return false;
}

bool ends_with_relation(const std::vector<int>& w, const Presentation& p) {
    for (const auto& r : p.relations) {
        size_t k = r.word.size();
        if (k <= w.size() && std::equal(r.word.begin(), r.word.end(), w.end() - k)) return true;
    }
    return false;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Lexer lx(text);
    Presentation p;
    bool saw_vertex = false, saw_arrows = false;
    struct RawArrow {
        Token name;
        std::optional<Token> src, tgt;
    };
    std::vector<RawArrow> raw_arrows;
    std::vector<std::vector<Token>> raw_relations;

    lx.skip_seps();
    while (lx.peek() != Kind::End) {
        if (lx.peek() != Kind::Word)
            throw ParseError("expected a statement keyword", lx.tok().line, lx.tok().col);
        Token kw = lx.take();
        if (kw.text == "vertex" || kw.text == "vertices") {
            saw_vertex = true;
            while (true) {
                if (lx.peek() != Kind::Word)
                    throw ParseError("expected vertex id", lx.tok().line, lx.tok().col);
                Token v = lx.take();
                if (p.quiver.vertex_index(v.text) >= 0)
                    throw ParseError("duplicate vertex '" + v.text + "'", v.line, v.col);
                p.quiver.vertices.push_back(v.text);
                if (lx.peek() == Kind::Comma) {
                    lx.take();
                    continue;
                }
                break;
            }
        } else if (kw.text == "arrows" || kw.text == "arrow") {
            saw_arrows = true;
            while (true) {
                if (lx.peek() != Kind::Word)
                    throw ParseError("expected arrow name", lx.tok().line, lx.tok().col);
                RawArrow a;
                a.name = lx.take();
                if (lx.peek() == Kind::Colon) {
                    lx.take();
                    if (lx.peek() != Kind::Word)
                        throw ParseError("expected source vertex", lx.tok().line, lx.tok().col);
                    a.src = lx.take();
                    if (lx.peek() != Kind::ArrowOp)
                        throw ParseError("expected '->'", lx.tok().line, lx.tok().col);
                    lx.take();
                    if (lx.peek() != Kind::Word)
                        throw ParseError("expected target vertex", lx.tok().line, lx.tok().col);
                    a.tgt = lx.take();
                }
                raw_arrows.push_back(std::move(a));
                if (lx.peek() == Kind::Comma) {
                    lx.take();
                    continue;
                }
                break;
            }
        } else if (kw.text == "relations" || kw.text == "relation") {
            while (true) {
                std::vector<Token> word;
                while (lx.peek() == Kind::Word) word.push_back(lx.take());
                if (word.empty())
                    throw ParseError("expected a relation word", lx.tok().line, lx.tok().col);
                raw_relations.push_back(std::move(word));
                if (lx.peek() == Kind::Comma) {
                    lx.take();
                    continue;
                }
                break;
            }
        } else {
            throw ParseError("unknown keyword '" + kw.text + "'", kw.line, kw.col);
        }
        if (lx.peek() != Kind::Sep && lx.peek() != Kind::End)
            throw ParseError("expected ';' or newline", lx.tok().line, lx.tok().col);
        lx.skip_seps();
    }

    if (!saw_arrows) throw InputError("presentation declares no arrows");
    if (!saw_vertex) p.quiver.vertices.push_back("1");

    for (const auto& a : raw_arrows) {
        if (p.quiver.arrow_index(a.name.text) >= 0)
            throw ParseError("duplicate arrow '" + a.name.text + "'", a.name.line, a.name.col);
        Arrow arr;
        arr.name = a.name.text;
        if (a.src) {
            arr.src = p.quiver.vertex_index(a.src->text);
            if (arr.src < 0)
                throw ParseError("undeclared vertex '" + a.src->text + "'", a.src->line, a.src->col);
            arr.tgt = p.quiver.vertex_index(a.tgt->text);
            if (arr.tgt < 0)
                throw ParseError("undeclared vertex '" + a.tgt->text + "'", a.tgt->line, a.tgt->col);
        } else {
            if (p.quiver.vertices.size() != 1)
                throw ParseError("arrow '" + a.name.text + "' needs source->target (several vertices declared)",
                                 a.name.line, a.name.col);
            arr.src = arr.tgt = 0;
        }
        p.quiver.arrows.push_back(std::move(arr));
    }

    for (const auto& word : raw_relations) {
        Monomial m;
        for (const auto& t : word) {
            int a = p.quiver.arrow_index(t.text);
            if (a < 0) throw ParseError("unknown arrow '" + t.text + "'", t.line, t.col);
            m.word.push_back(a);
        }
        if (m.weight() < 2)
            throw ParseError("relation must have weight >= 2", word.front().line, word.front().col);
        if (!p.composable(m))
            throw ParseError("relation is not a composable path", word.front().line, word.front().col);
        p.relations.push_back(std::move(m));
    }

    // antichain: no relation divides (is a contiguous subword of) another
    auto spell = [&](const Monomial& m) {
        std::string s;
        for (size_t i = 0; i < m.word.size(); ++i) {
            if (i) s += ' ';
            s += p.quiver.arrows[m.word[i]].name;
        }
        return s;
    };
    for (size_t i = 0; i < p.relations.size(); ++i)
        for (size_t j = 0; j < p.relations.size(); ++j) {
            if (i == j) continue;
            if (contains_as_subword(p.relations[j].word, p.relations[i].word)) {
                std::ostringstream os;
                os << "relation '" << spell(p.relations[i]) << "' divides relation '"
                   << spell(p.relations[j]) << "': the relation set is not an antichain";
                throw InputError(os.str());
            }
        }

    std::sort(p.relations.begin(), p.relations.end());
    return p;
}

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
}

bool is_normal(const Monomial& m, const Presentation& p) {
    for (const auto& r : p.relations)
        if (contains_as_subword(m.word, r.word)) return false;
    return true;
}

bool zero_minimally(const Monomial& u, const Monomial& v, const Presentation& p) {
    if (!p.composable_pair(u, v)) throw InputError("zero_minimally: non-composable pair");
    std::vector<int> w = u.word;
    for (int k = 0; k < v.weight(); ++k) {
        w.push_back(v.word[k]);
        bool red = ends_with_relation(w, p);
        if (k + 1 < v.weight()) {
            if (red) return false;
        } else {
            return red;
        }
    }
    return false;  // unreachable, v has weight >= 1
}

std::vector<std::vector<Monomial>> normal_basis(const Presentation& p, int max_weight) {
    std::vector<std::vector<Monomial>> out;
    if (max_weight < 1) return out;
    out.resize(max_weight);
    for (size_t a = 0; a < p.quiver.arrows.size(); ++a) {
        Monomial m;
        m.word.push_back(static_cast<int>(a));
        if (is_normal(m, p)) out[0].push_back(std::move(m));
    }
    for (int w = 2; w <= max_weight; ++w) {
        for (const auto& m : out[w - 2]) {
            int tgt = p.target(m);
            for (size_t a = 0; a < p.quiver.arrows.size(); ++a) {
                if (p.quiver.source(static_cast<int>(a)) != tgt) continue;
                Monomial ext = m;
                ext.word.push_back(static_cast<int>(a));
                if (!ends_with_relation(ext.word, p)) out[w - 1].push_back(std::move(ext));
            }
        }
    }
    return out;
}

}  // namespace anick
