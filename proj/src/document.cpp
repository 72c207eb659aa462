#include "sftlab/document.hpp"

#include <charconv>
#include <sstream>

namespace sftlab {

namespace {

struct Tok {
    std::string text;
    int line = 0;
};

using Statement = std::vector<Tok>;

bool lex_lines(std::string_view text, std::vector<Statement>* out,
               std::vector<ParseError>* errors) {
    std::vector<Statement> stmts;
    Statement cur;
    int depth = 0;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        // Braces and semicolons separate even without whitespace around them.
        std::string padded;
        padded.reserve(line.size() + 8);
        for (char ch : line) {
            if (ch == '{' || ch == '}' || ch == ';') {
                padded.push_back(' ');
                padded.push_back(ch);
                padded.push_back(' ');
            } else {
                padded.push_back(ch);
            }
        }
        std::istringstream in(padded);
        std::string word;
        while (in >> word) {
            if (word == "{") ++depth;
            if (word == "}") {
                --depth;
                if (depth < 0) {
                    errors->push_back({line_no, "unmatched '}'"});
                    return false;
                }
            }
            cur.push_back({word, line_no});
        }
        if (depth == 0 && !cur.empty()) {
            stmts.push_back(std::move(cur));
            cur.clear();
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    if (!cur.empty()) {
        errors->push_back({cur.front().line, "unterminated '{' block"});
        return false;
    }
    *out = std::move(stmts);
    return true;
}

bool parse_int(const std::string& s, long long* out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, *out);
    return ec == std::errc() && ptr == last;
}

class Parser {
  public:
    explicit Parser(std::vector<ParseError>* errors) : errors_(errors) {}

    Document doc;

    void statement(const Statement& st) {
        const std::string& head = st.front().text;
        if (head == "dim") {
            parse_dim(st);
        } else if (head == "alphabet") {
            parse_alphabet(st);
        } else if (head == "sft") {
            parse_sft(st);
        } else if (head == "code") {
            parse_code(st);
        } else if (head == "toeplitz") {
            parse_toeplitz(st);
        } else if (head == "cmd") {
            parse_cmd(st);
        } else {
            error(st.front().line, "unknown statement '" + head + "'");
        }
    }

    bool finish() {
        if (!saw_dim_) errors_->insert(errors_->begin(), {1, "missing 'dim' statement"});
        return errors_->empty();
    }

  private:
    std::vector<ParseError>* errors_;
    bool saw_dim_ = false;
    bool saw_alphabet_ = false;

    void error(int line, std::string msg) { errors_->push_back({line, std::move(msg)}); }

    bool need_dim(int line) {
        if (!saw_dim_) error(line, "statement before 'dim'");
        return saw_dim_;
    }

    bool need_alphabet(int line) {
        if (!saw_alphabet_) error(line, "statement before 'alphabet'");
        return saw_alphabet_;
    }

    bool name_free(const std::string& name, int line) {
        if (doc.sfts.count(name) || doc.codes.count(name) || doc.toeplitz.count(name)) {
            error(line, "duplicate name '" + name + "'");
            return false;
        }
        return true;
    }

    void parse_dim(const Statement& st) {
        int line = st.front().line;
        if (saw_dim_) {
            error(line, "'dim' declared twice");
            return;
        }
        long long v = 0;
        if (st.size() != 2 || !parse_int(st[1].text, &v) || v < 1 || v > 3) {
            error(line, "expected 'dim N' with N in 1..3");
            return;
        }
        doc.dim = static_cast<int>(v);
        saw_dim_ = true;
    }

    void parse_alphabet(const Statement& st) {
        int line = st.front().line;
        if (saw_alphabet_) {
            error(line, "'alphabet' declared twice");
            return;
        }
        if (st.size() < 2) {
            error(line, "alphabet needs at least one symbol");
            return;
        }
        Alphabet a;
        for (std::size_t i = 1; i < st.size(); ++i) {
            if (a.index_of(st[i].text) >= 0) {
                error(st[i].line, "duplicate symbol '" + st[i].text + "'");
                return;
            }
            a.names.push_back(st[i].text);
        }
        doc.alphabet = std::move(a);
        saw_alphabet_ = true;
    }

    // `(c1,...,cd)=name` against the document alphabet.
    bool parse_assign(const Tok& tok, Cell* cell, Symbol* sym) {
        const std::string& s = tok.text;
        std::size_t close = s.find(")=");
        if (s.empty() || s.front() != '(' || close == std::string::npos) {
            error(tok.line, "expected '(c1,..)=symbol', got '" + s + "'");
            return false;
        }
        std::string inside = s.substr(1, close - 1);
        std::string name = s.substr(close + 2);
        Cell c;
        std::size_t p = 0;
        while (p <= inside.size()) {
            std::size_t comma = inside.find(',', p);
            std::string part =
                inside.substr(p, comma == std::string::npos ? inside.size() - p : comma - p);
            long long v = 0;
            if (!parse_int(part, &v)) {
                error(tok.line, "bad coordinate '" + part + "' in '" + s + "'");
                return false;
            }
            c.push_back(static_cast<int>(v));
            if (comma == std::string::npos) break;
            p = comma + 1;
        }
        if (static_cast<int>(c.size()) != doc.dim) {
            error(tok.line, "cell arity " + std::to_string(c.size()) + " in '" + s +
                                "' does not match dim " + std::to_string(doc.dim));
            return false;
        }
        int idx = doc.alphabet.index_of(name);
        if (idx < 0) {
            error(tok.line, "unknown symbol '" + name + "'");
            return false;
        }
        *cell = std::move(c);
        *sym = idx;
        return true;
    }

    // Splits the token run between `{` and `}` into `;`-separated groups.
    bool brace_groups(const Statement& st, std::size_t from, std::vector<Statement>* groups) {
        if (from >= st.size() || st[from].text != "{" || st.back().text != "}") {
            error(st.front().line, "expected '{ ... }' block");
            return false;
        }
        Statement cur;
        for (std::size_t i = from + 1; i + 1 < st.size(); ++i) {
            if (st[i].text == ";") {
                groups->push_back(cur);
                cur.clear();
            } else {
                cur.push_back(st[i]);
            }
        }
        groups->push_back(cur);
        return true;
    }

    void parse_sft(const Statement& st) {
        int line = st.front().line;
        if (!need_dim(line) || !need_alphabet(line)) return;
        if (st.size() < 3) {
            error(line, "expected 'sft NAME { ... }'");
            return;
        }
        const std::string& name = st[1].text;
        if (!name_free(name, line)) return;
        if (st[2].text != "{" || st.back().text != "}") {
            error(line, "expected '{ ... }' block");
            return;
        }
        Sft x;
        x.dim = doc.dim;
        x.alphabet = doc.alphabet;
        // Inside the block, ';' and a repeated 'forbid' both end a pattern.
        Pattern cur;
        cur.dim = doc.dim;
        bool open = false;
        auto close = [&] {
            if (!cur.cells.empty()) x.forbidden.push_back(cur);
            cur.cells.clear();
        };
        for (std::size_t i = 3; i + 1 < st.size(); ++i) {
            const Tok& t = st[i];
            if (t.text == "forbid") {
                close();
                open = true;
            } else if (t.text == ";") {
                close();
            } else {
                if (!open) {
                    error(t.line, "sft block must start with 'forbid'");
                    return;
                }
                Cell c;
                Symbol s = 0;
                if (!parse_assign(t, &c, &s)) return;
                if (cur.cells.count(c)) {
                    error(t.line, "cell assigned twice in forbidden pattern");
                    return;
                }
                cur.cells[c] = s;
            }
        }
        close();
        doc.sfts.emplace(name, std::move(x));
    }

    void parse_code(const Statement& st) {
        int line = st.front().line;
        if (!need_dim(line) || !need_alphabet(line)) return;
        if (st.size() < 3) {
            error(line, "expected 'code NAME { ... }'");
            return;
        }
        const std::string& name = st[1].text;
        if (!name_free(name, line)) return;
        std::vector<Statement> groups;
        if (!brace_groups(st, 2, &groups)) return;
        SlidingBlockCode c;
        c.dim = doc.dim;
        c.input_alphabet = doc.alphabet;
        c.output_alphabet = doc.alphabet;
        bool saw_radius = false;
        bool saw_default = false;
        struct RawMap {
            Statement lhs;
            Tok rhs;
        };
        std::vector<RawMap> maps;
        for (const Statement& g : groups) {
            if (g.empty()) continue;
            const std::string& kw = g[0].text;
            if (kw == "radius") {
                long long v = 0;
                if (g.size() != 2 || !parse_int(g[1].text, &v) || v < 0) {
                    error(g[0].line, "expected 'radius N' with N >= 0");
                    return;
                }
                c.radius = static_cast<int>(v);
                saw_radius = true;
            } else if (kw == "default") {
                if (g.size() != 2) {
                    error(g[0].line, "expected 'default SYMBOL'");
                    return;
                }
                int idx = doc.alphabet.index_of(g[1].text);
                if (idx < 0) {
                    error(g[1].line, "unknown symbol '" + g[1].text + "'");
                    return;
                }
                c.default_output = idx;
                saw_default = true;
            } else if (kw == "map") {
                if (g.size() < 4 || g[g.size() - 2].text != "->") {
                    error(g[0].line, "expected 'map (..)=s ... -> SYMBOL'");
                    return;
                }
                RawMap m;
                m.lhs.assign(g.begin() + 1, g.end() - 2);
                m.rhs = g.back();
                maps.push_back(std::move(m));
            } else {
                error(g[0].line, "unknown code clause '" + kw + "'");
                return;
            }
        }
        if (!saw_radius || !saw_default) {
            error(line, "code needs 'radius' and 'default' clauses");
            return;
        }
        Window win(doc.dim, c.radius);
        std::vector<Cell> win_cells = win.cells();
        for (const RawMap& m : maps) {
            Pattern p;
            p.dim = doc.dim;
            for (const Tok& t : m.lhs) {
                Cell cc;
                Symbol s = 0;
                if (!parse_assign(t, &cc, &s)) return;
                if (p.cells.count(cc)) {
                    error(t.line, "cell assigned twice in map");
                    return;
                }
                p.cells[cc] = s;
            }
            if (p.cells.size() != win_cells.size()) {
                error(m.rhs.line, "map must assign every cell of the radius-" +
                                      std::to_string(c.radius) + " window");
                return;
            }
            std::vector<Symbol> key;
            key.reserve(win_cells.size());
            for (const Cell& cc : win_cells) {
                auto it = p.cells.find(cc);
                if (it == p.cells.end()) {
                    error(m.rhs.line, "map cell outside the radius-" +
                                          std::to_string(c.radius) + " window");
                    return;
                }
                key.push_back(it->second);
            }
            int idx = doc.alphabet.index_of(m.rhs.text);
            if (idx < 0) {
                error(m.rhs.line, "unknown symbol '" + m.rhs.text + "'");
                return;
            }
            auto [it, fresh] = c.rule.emplace(std::move(key), idx);
            if (!fresh && it->second != idx) {
                error(m.rhs.line, "conflicting map entries");
                return;
            }
        }
        doc.codes.emplace(name, std::move(c));
    }

    void parse_toeplitz(const Statement& st) {
        int line = st.front().line;
        if (!need_dim(line)) return;
        if (doc.dim != 1) {
            error(line, "toeplitz requires dim 1");
            return;
        }
        if (st.size() < 3) {
            error(line, "expected 'toeplitz NAME { ... }'");
            return;
        }
        const std::string& name = st[1].text;
        if (!name_free(name, line)) return;
        std::vector<Statement> groups;
        if (!brace_groups(st, 2, &groups)) return;
        ToeplitzSpec spec;
        bool saw_omega = false;
        for (const Statement& g : groups) {
            if (g.empty()) continue;
            const std::string& kw = g[0].text;
            if (kw == "omega") {
                if (saw_omega) {
                    error(g[0].line, "'omega' declared twice");
                    return;
                }
                for (std::size_t i = 1; i < g.size(); ++i) {
                    long long v = 0;
                    if (!parse_int(g[i].text, &v) || (v != 0 && v != 1)) {
                        error(g[i].line, "omega entries must be 0 or 1");
                        return;
                    }
                    spec.omega.push_back(static_cast<int>(v));
                }
                if (spec.omega.empty()) {
                    error(g[0].line, "omega needs at least one bit");
                    return;
                }
                saw_omega = true;
            } else if (kw == "enumeration") {
                for (std::size_t i = 1; i < g.size(); ++i) {
                    long long v = 0;
                    if (!parse_int(g[i].text, &v)) {
                        error(g[i].line, "bad enumeration entry '" + g[i].text + "'");
                        return;
                    }
                    spec.enumeration.push_back(v);
                }
            } else {
                error(g[0].line, "unknown toeplitz clause '" + kw + "'");
                return;
            }
        }
        if (!saw_omega) {
            error(line, "toeplitz needs an 'omega' clause");
            return;
        }
        try {
            validate_toeplitz(spec);
        } catch (const Error& e) {
            error(line, e.what());
            return;
        }
        doc.toeplitz.emplace(name, std::move(spec));
    }

    bool want_sft(const Tok& t) {
        if (doc.sfts.count(t.text)) return true;
        error(t.line, "unknown sft '" + t.text + "'");
        return false;
    }

    bool want_code(const Tok& t) {
        if (doc.codes.count(t.text)) return true;
        error(t.line, "unknown code '" + t.text + "'");
        return false;
    }

    bool want_toeplitz(const Tok& t) {
        if (doc.toeplitz.count(t.text)) return true;
        error(t.line, "unknown toeplitz system '" + t.text + "'");
        return false;
    }

    bool want_int(const Tok& t) {
        long long v = 0;
        if (parse_int(t.text, &v)) return true;
        error(t.line, "expected integer, got '" + t.text + "'");
        return false;
    }

    void parse_cmd(const Statement& st) {
        int line = st.front().line;
        if (!need_dim(line) || !need_alphabet(line)) return;
        if (st.size() < 2) {
            error(line, "expected 'cmd OP ...'");
            return;
        }
        const std::string& op = st[1].text;
        std::vector<Tok> a(st.begin() + 2, st.end());
        auto arity = [&](std::size_t n) {
            if (a.size() == n) return true;
            error(line, "'" + op + "' expects " + std::to_string(n) + " arguments");
            return false;
        };
        bool ok = false;
        if (op == "blocks" || op == "empty" || op == "witness" || op == "transition") {
            ok = arity(2) && want_sft(a[0]) && want_int(a[1]);
        } else if (op == "boxes") {
            ok = arity(1 + static_cast<std::size_t>(doc.dim)) && want_sft(a[0]);
            for (std::size_t i = 1; ok && i < a.size(); ++i) ok = want_int(a[i]);
        } else if (op == "dist") {
            ok = arity(3) && want_sft(a[0]) && want_sft(a[1]) && want_int(a[2]);
        } else if (op == "stability") {
            ok = arity(2) && want_sft(a[0]) && want_code(a[1]);
        } else if (op == "image") {
            ok = arity(3) && want_sft(a[0]) && want_code(a[1]) && want_int(a[2]);
        } else if (op == "imagecheck") {
            ok = arity(4) && want_sft(a[0]) && want_int(a[1]) && want_code(a[2]) &&
                 want_sft(a[3]);
        } else if (op == "refine") {
            ok = arity(2) && want_code(a[0]) && want_int(a[1]);
        } else if (op == "compose") {
            ok = arity(2) && want_code(a[0]) && want_code(a[1]);
        } else if (op == "encode" || op == "colorbases") {
            ok = arity(2) && want_toeplitz(a[0]) && want_int(a[1]);
        } else if (op == "decode" || op == "orbit") {
            ok = arity(3) && want_toeplitz(a[0]) && want_int(a[1]) && want_int(a[2]);
        } else if (op == "syndetic") {
            if (a.size() < 4) {
                error(line, "'syndetic' expects SYSTEM N GAP BIT...");
                return;
            }
            ok = want_toeplitz(a[0]) && want_int(a[1]) && want_int(a[2]);
            for (std::size_t i = 3; ok && i < a.size(); ++i) {
                long long v = 0;
                if (!parse_int(a[i].text, &v) || (v != 0 && v != 1)) {
                    error(a[i].line, "syndetic block bits must be 0 or 1");
                    ok = false;
                }
            }
        } else if (op == "perturb") {
            ok = arity(5) && want_sft(a[0]) && want_code(a[1]);
            if (ok) {
                bool seen[3] = {false, false, false};
                const char* keys[3] = {"keep=", "patmax=", "imgmax="};
                for (std::size_t i = 2; i < 5 && ok; ++i) {
                    bool matched = false;
                    for (int k = 0; k < 3; ++k) {
                        std::string prefix = keys[k];
                        if (a[i].text.rfind(prefix, 0) == 0) {
                            long long v = 0;
                            if (!parse_int(a[i].text.substr(prefix.size()), &v) || v < 0) {
                                error(a[i].line, "bad value in '" + a[i].text + "'");
                                ok = false;
                            } else if (seen[k]) {
                                error(a[i].line, "duplicate '" + prefix + "' argument");
                                ok = false;
                            }
                            seen[k] = true;
                            matched = true;
                            break;
                        }
                    }
                    if (!matched) {
                        error(a[i].line,
                              "expected keep=N patmax=N imgmax=N, got '" + a[i].text + "'");
                        ok = false;
                    }
                }
                if (ok && !(seen[0] && seen[1] && seen[2])) {
                    error(line, "perturb needs keep=, patmax= and imgmax=");
                    ok = false;
                }
            }
        } else if (op == "product") {
            if (a.size() < 2) {
                error(line, "'product' expects SFT... N");
                return;
            }
            ok = want_int(a.back());
            for (std::size_t i = 0; ok && i + 1 < a.size(); ++i) ok = want_sft(a[i]);
        } else {
            error(line, "unknown command '" + op + "'");
            return;
        }
        if (!ok) return;
        Command cmd;
        cmd.op = op;
        cmd.line = line;
        for (const Tok& t : a) cmd.args.push_back(t.text);
        doc.commands.push_back(std::move(cmd));
    }
};

}  // namespace

ParseOutcome parse_document(std::string_view text) {
    ParseOutcome out;
    std::vector<Statement> stmts;
    if (!lex_lines(text, &stmts, &out.errors)) return out;
    Parser parser(&out.errors);
    for (const Statement& st : stmts) parser.statement(st);
    if (parser.finish()) out.document = std::move(parser.doc);
    return out;
}

}  // namespace sftlab
