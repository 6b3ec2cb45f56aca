#include "qdcs/logic.hpp"

#include <cctype>

namespace qdcs {

IndividualFormula FormulaArena::intern_ind(IndividualOp op, uint32_t a, uint32_t b) {
    Node n{static_cast<uint8_t>(op), a, b};
    auto [it, inserted] = iintern_.try_emplace(n, static_cast<uint32_t>(inodes_.size()));
    if (inserted) inodes_.push_back(n);
    return {it->second};
}

CollectiveFormula FormulaArena::intern_coll(CollectiveOp op, uint32_t a, uint32_t b) {
    Node n{static_cast<uint8_t>(op), a, b};
    auto [it, inserted] = cintern_.try_emplace(n, static_cast<uint32_t>(cnodes_.size()));
    if (inserted) cnodes_.push_back(n);
    return {it->second};
}

void FormulaArena::check(IndividualFormula f) const {
    if (f.id >= inodes_.size()) throw Error("individual formula handle not from this arena");
}

void FormulaArena::check(CollectiveFormula c) const {
    if (c.id >= cnodes_.size()) throw Error("collective formula handle not from this arena");
}

IndividualFormula FormulaArena::atom(std::string_view name) {
    auto [it, inserted] = atom_intern_.try_emplace(std::string(name), static_cast<uint32_t>(atom_names_.size()));
    if (inserted) atom_names_.emplace_back(name);
    return intern_ind(IndividualOp::Atom, it->second, 0);
}

IndividualFormula FormulaArena::top() { return intern_ind(IndividualOp::Top, 0, 0); }

IndividualFormula FormulaArena::negation(IndividualFormula f) {
    check(f);
    return intern_ind(IndividualOp::Not, f.id, 0);
}

IndividualFormula FormulaArena::conjunction(IndividualFormula l, IndividualFormula r) {
    check(l);
    check(r);
    return intern_ind(IndividualOp::And, l.id, r.id);
}

IndividualFormula FormulaArena::near(IndividualFormula f) {
    check(f);
    return intern_ind(IndividualOp::Near, f.id, 0);
}

IndividualFormula FormulaArena::surrounded(IndividualFormula l, IndividualFormula r) {
    check(l);
    check(r);
    return intern_ind(IndividualOp::Surrounded, l.id, r.id);
}

IndividualFormula FormulaArena::propagation(IndividualFormula l, IndividualFormula r) {
    check(l);
    check(r);
    return intern_ind(IndividualOp::Propagation, l.id, r.id);
}

CollectiveFormula FormulaArena::coll_top() { return intern_coll(CollectiveOp::Top, 0, 0); }

CollectiveFormula FormulaArena::coll_negation(CollectiveFormula c) {
    check(c);
    return intern_coll(CollectiveOp::Not, c.id, 0);
}

CollectiveFormula FormulaArena::coll_conjunction(CollectiveFormula l, CollectiveFormula r) {
    check(l);
    check(r);
    return intern_coll(CollectiveOp::And, l.id, r.id);
}

CollectiveFormula FormulaArena::share(IndividualFormula f, CollectiveFormula c) {
    check(f);
    check(c);
    return intern_coll(CollectiveOp::Share, f.id, c.id);
}

CollectiveFormula FormulaArena::group(IndividualFormula f) {
    check(f);
    return intern_coll(CollectiveOp::Group, f.id, 0);
}

IndividualOp FormulaArena::op(IndividualFormula f) const {
    check(f);
    return static_cast<IndividualOp>(inodes_[f.id].op);
}

const std::string& FormulaArena::atom_name(IndividualFormula f) const {
    check(f);
    if (op(f) != IndividualOp::Atom) throw Error("atom_name: not an atom");
    return atom_names_[inodes_[f.id].a];
}

IndividualFormula FormulaArena::left(IndividualFormula f) const {
    check(f);
    if (op(f) == IndividualOp::Atom || op(f) == IndividualOp::Top) throw Error("left: leaf formula");
    return {inodes_[f.id].a};
}

IndividualFormula FormulaArena::right(IndividualFormula f) const {
    check(f);
    switch (op(f)) {
        case IndividualOp::And:
        case IndividualOp::Surrounded:
        case IndividualOp::Propagation:
            return {inodes_[f.id].b};
        default:
            throw Error("right: not a binary formula");
    }
}

CollectiveOp FormulaArena::op(CollectiveFormula c) const {
    check(c);
    return static_cast<CollectiveOp>(cnodes_[c.id].op);
}

CollectiveFormula FormulaArena::coll_left(CollectiveFormula c) const {
    check(c);
    switch (op(c)) {
        case CollectiveOp::Not:
        case CollectiveOp::And:
            return {cnodes_[c.id].a};
        case CollectiveOp::Share:
            return {cnodes_[c.id].b};
        default:
            throw Error("coll_left: no collective child");
    }
}

CollectiveFormula FormulaArena::coll_right(CollectiveFormula c) const {
    check(c);
    if (op(c) != CollectiveOp::And) throw Error("coll_right: not a conjunction");
    return {cnodes_[c.id].b};
}

IndividualFormula FormulaArena::individual_of(CollectiveFormula c) const {
    check(c);
    switch (op(c)) {
        case CollectiveOp::Share:
        case CollectiveOp::Group:
            return {cnodes_[c.id].a};
        default:
            throw Error("individual_of: no individual operand");
    }
}

// ---------------------------------------------------------------- lexing

namespace {

struct Token {
    enum Kind { Word, Color, LParen, RParen, Amp, Pipe, Bang, ShareArrow, End };
    Kind kind;
    std::string text;
    int line, col;
};

[[noreturn]] void fail_at(int line, int col, const std::string& msg) {
    throw Error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t k) {
        for (size_t j = 0; j < k; ++j, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        int tl = line, tc = col;
        if (c == '(') {
            out.push_back({Token::LParen, "(", tl, tc});
            advance(1);
        } else if (c == ')') {
            out.push_back({Token::RParen, ")", tl, tc});
            advance(1);
        } else if (c == '&') {
            out.push_back({Token::Amp, "&", tl, tc});
            advance(1);
        } else if (c == '|') {
            out.push_back({Token::Pipe, "|", tl, tc});
            advance(1);
        } else if (c == '!') {
            out.push_back({Token::Bang, "!", tl, tc});
            advance(1);
        } else if (c == '-') {
            if (i + 1 >= text.size() || text[i + 1] != '<') fail_at(tl, tc, "expected '-<'");
            out.push_back({Token::ShareArrow, "-<", tl, tc});
            advance(2);
        } else if (c == '#') {
            if (i + 7 > text.size()) fail_at(tl, tc, "truncated color literal");
            std::string lit(text.substr(i, 7));
            for (size_t j = 1; j < 7; ++j) {
                if (!std::isxdigit(static_cast<unsigned char>(lit[j])))
                    fail_at(tl, tc, "color literal must be # followed by six hex digits");
                // Image models name color propositions in lower case.
                lit[j] = static_cast<char>(std::tolower(static_cast<unsigned char>(lit[j])));
            }
            out.push_back({Token::Color, lit, tl, tc});
            advance(7);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({Token::Word, std::string(text.substr(i, j - i)), tl, tc});
            advance(j - i);
        } else {
            fail_at(tl, tc, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::End, "", line, col});
    return out;
}

// ---------------------------------------------------------------- parsing

SurfacePtr mk(SurfaceOp op, SurfacePtr l = nullptr, SurfacePtr r = nullptr) {
    return std::make_shared<SurfaceTerm>(SurfaceTerm{op, "", std::move(l), std::move(r)});
}

SurfacePtr mk_atom(std::string name) {
    return std::make_shared<SurfaceTerm>(SurfaceTerm{SurfaceOp::Atom, std::move(name), nullptr, nullptr});
}

const std::map<std::string_view, SurfaceOp> kUnaryOps = {
    {"N", SurfaceOp::Near},          {"I", SurfaceOp::Interior},
    {"E", SurfaceOp::Everywhere},    {"F", SurfaceOp::Somewhere},
    {"G", SurfaceOp::Group},         {"forall", SurfaceOp::Forall},
    {"exists", SurfaceOp::Exists},   {"boundary", SurfaceOp::BoundaryFull},
    {"iboundary", SurfaceOp::BoundaryInner},
    {"cboundary", SurfaceOp::BoundaryOuter},
};

const std::map<std::string_view, SurfaceOp> kSpatialOps = {
    {"S", SurfaceOp::Surrounded}, {"P", SurfaceOp::Propagation},
    {"U", SurfaceOp::Until},      {"T", SurfaceOp::Touch},
    {"Pbar", SurfaceOp::PropagationBar},
    {"CS", SurfaceOp::CollSurrounded},
    {"PART", SurfaceOp::Partition},
};

bool is_keyword(std::string_view w) {
    return w == "TT" || w == "FF" || w == "empty" || kUnaryOps.count(w) || kSpatialOps.count(w);
}

class Parser {
public:
    Parser(std::vector<Token> tokens, const MacroTable* macros)
        : tokens_(std::move(tokens)), macros_(macros) {}

    SurfacePtr parse() {
        SurfacePtr t = parse_share();
        expect(Token::End, "end of formula");
        return t;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }
    void expect(Token::Kind k, const char* what) {
        if (peek().kind != k)
            fail_at(peek().line, peek().col,
                    std::string("expected ") + what + ", found '" + peek().text + "'");
        take();
    }

    const SurfaceOp* spatial_op() const {
        if (peek().kind != Token::Word) return nullptr;
        auto it = kSpatialOps.find(peek().text);
        return it == kSpatialOps.end() ? nullptr : &it->second;
    }

    SurfacePtr parse_share() {
        SurfacePtr lhs = parse_spatial();
        if (peek().kind == Token::ShareArrow) {
            take();
            return mk(SurfaceOp::Share, lhs, parse_share());  // right-associative
        }
        return lhs;
    }

    SurfacePtr parse_spatial() {
        SurfacePtr lhs = parse_disj();
        if (const SurfaceOp* op = spatial_op()) {
            Token t = take();
            SurfacePtr rhs = parse_disj();
            if (spatial_op())
                fail_at(peek().line, peek().col,
                        "'" + t.text + "' and '" + peek().text +
                            "' are non-associative; parenthesize one side");
            return mk(*op, lhs, rhs);
        }
        return lhs;
    }

    SurfacePtr parse_disj() {
        SurfacePtr t = parse_conj();
        while (peek().kind == Token::Pipe) {
            take();
            t = mk(SurfaceOp::Or, t, parse_conj());
        }
        return t;
    }

    SurfacePtr parse_conj() {
        SurfacePtr t = parse_unary();
        while (peek().kind == Token::Amp) {
            take();
            t = mk(SurfaceOp::And, t, parse_unary());
        }
        return t;
    }

    SurfacePtr parse_unary() {
        if (peek().kind == Token::Bang) {
            take();
            return mk(SurfaceOp::Not, parse_unary());
        }
        if (peek().kind == Token::Word) {
            auto it = kUnaryOps.find(peek().text);
            if (it != kUnaryOps.end()) {
                take();
                return mk(it->second, parse_unary());
            }
        }
        return parse_primary();
    }

    SurfacePtr parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::LParen: {
                take();
                SurfacePtr inner = parse_share();
                expect(Token::RParen, "')'");
                return inner;
            }
            case Token::Color:
                return mk_atom(take().text);
            case Token::Word: {
                if (t.text == "TT") {
                    take();
                    return mk(SurfaceOp::Top);
                }
                if (t.text == "FF") {
                    take();
                    return mk(SurfaceOp::Bottom);
                }
                if (t.text == "empty") {
                    take();
                    return mk(SurfaceOp::Empty);
                }
                if (is_keyword(t.text))
                    fail_at(t.line, t.col, "operator '" + t.text + "' needs an operand");
                std::string name = take().text;
                if (macros_) {
                    auto it = macros_->find(name);
                    if (it != macros_->end()) return it->second;
                }
                return mk_atom(std::move(name));
            }
            default:
                fail_at(t.line, t.col, "expected a formula, found '" + t.text + "'");
        }
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
    const MacroTable* macros_;
};

}  // namespace

SurfacePtr parse_surface(std::string_view text, const MacroTable* macros) {
    return Parser(lex(text), macros).parse();
}

// ---------------------------------------------------------------- desugaring

namespace {

IndividualFormula bottom_core(FormulaArena& a) { return a.negation(a.top()); }

IndividualFormula or_core(FormulaArena& a, IndividualFormula l, IndividualFormula r) {
    return a.negation(a.conjunction(a.negation(l), a.negation(r)));
}

IndividualFormula interior_core(FormulaArena& a, IndividualFormula f) {
    return a.negation(a.near(a.negation(f)));
}

IndividualFormula until_core(FormulaArena& a, IndividualFormula l, IndividualFormula r) {
    return a.negation(a.surrounded(a.negation(r), a.negation(l)));
}

[[noreturn]] void not_individual(SurfaceOp op) {
    static const std::map<SurfaceOp, std::string> names = {
        {SurfaceOp::Share, "-<"},        {SurfaceOp::Group, "G"},
        {SurfaceOp::Forall, "forall"},   {SurfaceOp::Exists, "exists"},
        {SurfaceOp::Empty, "empty"},     {SurfaceOp::CollSurrounded, "CS"},
        {SurfaceOp::Partition, "PART"},
    };
    throw Error("collective operator '" + names.at(op) + "' cannot appear inside an individual formula");
}

}  // namespace

IndividualFormula desugar_individual(FormulaArena& a, const SurfacePtr& t) {
    if (!t) throw Error("desugar_individual: null term");
    switch (t->op) {
        case SurfaceOp::Atom:
            return a.atom(t->atom);
        case SurfaceOp::Top:
            return a.top();
        case SurfaceOp::Bottom:
            return bottom_core(a);
        case SurfaceOp::Not:
            return a.negation(desugar_individual(a, t->lhs));
        case SurfaceOp::And:
            return a.conjunction(desugar_individual(a, t->lhs), desugar_individual(a, t->rhs));
        case SurfaceOp::Or:
            return or_core(a, desugar_individual(a, t->lhs), desugar_individual(a, t->rhs));
        case SurfaceOp::Near:
            return a.near(desugar_individual(a, t->lhs));
        case SurfaceOp::Interior:
            return interior_core(a, desugar_individual(a, t->lhs));
        case SurfaceOp::BoundaryFull: {
            IndividualFormula f = desugar_individual(a, t->lhs);
            return a.conjunction(a.near(f), a.negation(interior_core(a, f)));
        }
        case SurfaceOp::BoundaryInner: {
            IndividualFormula f = desugar_individual(a, t->lhs);
            return a.conjunction(f, a.negation(interior_core(a, f)));
        }
        case SurfaceOp::BoundaryOuter: {
            IndividualFormula f = desugar_individual(a, t->lhs);
            return a.conjunction(a.near(f), a.negation(f));
        }
        case SurfaceOp::Surrounded:
            return a.surrounded(desugar_individual(a, t->lhs), desugar_individual(a, t->rhs));
        case SurfaceOp::Propagation:
            return a.propagation(desugar_individual(a, t->lhs), desugar_individual(a, t->rhs));
        case SurfaceOp::Until:
            return until_core(a, desugar_individual(a, t->lhs), desugar_individual(a, t->rhs));
        case SurfaceOp::Touch: {
            IndividualFormula f1 = desugar_individual(a, t->lhs);
            IndividualFormula f2 = desugar_individual(a, t->rhs);
            return a.conjunction(f1, until_core(a, or_core(a, f1, f2), f2));
        }
        case SurfaceOp::Everywhere:
            return a.surrounded(desugar_individual(a, t->lhs), bottom_core(a));
        case SurfaceOp::Somewhere:
            return a.negation(a.surrounded(a.negation(desugar_individual(a, t->lhs)), bottom_core(a)));
        case SurfaceOp::PropagationBar:
            return a.negation(
                a.propagation(desugar_individual(a, t->lhs), a.negation(desugar_individual(a, t->rhs))));
        default:
            not_individual(t->op);
    }
}

CollectiveFormula desugar_collective(FormulaArena& a, const SurfacePtr& t) {
    if (!t) throw Error("desugar_collective: null term");
    switch (t->op) {
        case SurfaceOp::Top:
            return a.coll_top();
        case SurfaceOp::Bottom:
            return a.coll_negation(a.coll_top());
        case SurfaceOp::Not:
            return a.coll_negation(desugar_collective(a, t->lhs));
        case SurfaceOp::And:
            return a.coll_conjunction(desugar_collective(a, t->lhs), desugar_collective(a, t->rhs));
        case SurfaceOp::Or:
            return a.coll_negation(a.coll_conjunction(a.coll_negation(desugar_collective(a, t->lhs)),
                                                      a.coll_negation(desugar_collective(a, t->rhs))));
        case SurfaceOp::Share:
            return a.share(desugar_individual(a, t->lhs), desugar_collective(a, t->rhs));
        case SurfaceOp::Group:
            return a.group(desugar_individual(a, t->lhs));
        case SurfaceOp::Forall:
            return a.share(a.negation(desugar_individual(a, t->lhs)), a.group(bottom_core(a)));
        case SurfaceOp::Exists:
            // exists f == ! forall ! f
            return a.coll_negation(
                a.share(a.negation(a.negation(desugar_individual(a, t->lhs))), a.group(bottom_core(a))));
        case SurfaceOp::Empty:
            // empty == forall FF
            return a.share(a.negation(bottom_core(a)), a.group(bottom_core(a)));
        case SurfaceOp::CollSurrounded: {
            IndividualFormula f1 = desugar_individual(a, t->lhs);
            IndividualFormula f2 = desugar_individual(a, t->rhs);
            return a.group(a.conjunction(a.negation(f2), a.surrounded(f1, f2)));
        }
        case SurfaceOp::Partition: {
            IndividualFormula f1 = desugar_individual(a, t->lhs);
            IndividualFormula f2 = desugar_individual(a, t->rhs);
            IndividualFormula exactly_one =
                a.conjunction(or_core(a, f1, f2), a.negation(a.conjunction(f1, f2)));
            CollectiveFormula covered = a.share(a.negation(exactly_one), a.group(bottom_core(a)));
            CollectiveFormula cs12 =
                a.group(a.conjunction(a.negation(f2), a.surrounded(f1, f2)));
            CollectiveFormula cs21 =
                a.group(a.conjunction(a.negation(f1), a.surrounded(f2, f1)));
            return a.coll_conjunction(
                covered, a.coll_conjunction(a.share(f1, cs12), a.share(f2, cs21)));
        }
        default:
            throw Error("not a collective formula: the outermost operator must be one of "
                        "TT FF ! & | -< G forall exists empty CS PART");
    }
}

IndividualFormula parse_individual(FormulaArena& arena, std::string_view text, const MacroTable* macros) {
    return desugar_individual(arena, parse_surface(text, macros));
}

CollectiveFormula parse_collective(FormulaArena& arena, std::string_view text, const MacroTable* macros) {
    return desugar_collective(arena, parse_surface(text, macros));
}

// ---------------------------------------------------------------- printing

namespace {

// Binding strength used for minimal parenthesization: primaries 4, unary 3,
// & 2, spatial binaries 1, -< 0.
int ind_level(const FormulaArena& a, IndividualFormula f) {
    switch (a.op(f)) {
        case IndividualOp::Atom:
        case IndividualOp::Top:
            return 4;
        case IndividualOp::Not:
        case IndividualOp::Near:
            return 3;
        case IndividualOp::And:
            return 2;
        default:
            return 1;
    }
}

int coll_level(const FormulaArena& a, CollectiveFormula c) {
    switch (a.op(c)) {
        case CollectiveOp::Top:
            return 4;
        case CollectiveOp::Not:
        case CollectiveOp::Group:
            return 3;
        case CollectiveOp::And:
            return 2;
        default:
            return 0;  // Share
    }
}

std::string print_ind(const FormulaArena& a, IndividualFormula f, int min_level) {
    std::string s;
    switch (a.op(f)) {
        case IndividualOp::Atom:
            return a.atom_name(f);
        case IndividualOp::Top:
            return "TT";
        case IndividualOp::Not:
            s = "! " + print_ind(a, a.left(f), 3);
            break;
        case IndividualOp::Near:
            s = "N " + print_ind(a, a.left(f), 3);
            break;
        case IndividualOp::And:
            s = print_ind(a, a.left(f), 2) + " & " + print_ind(a, a.right(f), 3);
            break;
        case IndividualOp::Surrounded:
            s = print_ind(a, a.left(f), 2) + " S " + print_ind(a, a.right(f), 2);
            break;
        case IndividualOp::Propagation:
            s = print_ind(a, a.left(f), 2) + " P " + print_ind(a, a.right(f), 2);
            break;
    }
    if (ind_level(a, f) < min_level) return "(" + s + ")";
    return s;
}

std::string print_coll(const FormulaArena& a, CollectiveFormula c, int min_level) {
    std::string s;
    switch (a.op(c)) {
        case CollectiveOp::Top:
            return "TT";
        case CollectiveOp::Not:
            s = "! " + print_coll(a, a.coll_left(c), 3);
            break;
        case CollectiveOp::And:
            s = print_coll(a, a.coll_left(c), 2) + " & " + print_coll(a, a.coll_right(c), 3);
            break;
        case CollectiveOp::Group:
            s = "G " + print_ind(a, a.individual_of(c), 3);
            break;
        case CollectiveOp::Share:
            s = print_ind(a, a.individual_of(c), 1) + " -< " + print_coll(a, a.coll_left(c), 0);
            break;
    }
    if (coll_level(a, c) < min_level) return "(" + s + ")";
    return s;
}

}  // namespace

std::string pretty(const FormulaArena& arena, IndividualFormula f) { return print_ind(arena, f, 0); }

std::string pretty(const FormulaArena& arena, CollectiveFormula c) { return print_coll(arena, c, 0); }

// ---------------------------------------------------------------- size, atoms

uint64_t formula_size(const FormulaArena& a, IndividualFormula f) {
    // Children have smaller ids, so one bottom-up pass suffices (and shared
    // subterms still count with tree multiplicity, as the definition demands).
    std::vector<uint64_t> sz(f.id + 1, 0);
    for (uint32_t i = 0; i <= f.id; ++i) {
        IndividualFormula g{i};
        switch (a.op(g)) {
            case IndividualOp::Atom:
            case IndividualOp::Top:
                sz[i] = 1;
                break;
            case IndividualOp::Not:
            case IndividualOp::Near:
                sz[i] = 1 + sz[a.left(g).id];
                break;
            default:
                sz[i] = 1 + sz[a.left(g).id] + sz[a.right(g).id];
        }
    }
    return sz[f.id];
}

uint64_t formula_size(const FormulaArena& a, CollectiveFormula c) {
    std::vector<uint64_t> sz(c.id + 1, 0);
    for (uint32_t i = 0; i <= c.id; ++i) {
        CollectiveFormula g{i};
        switch (a.op(g)) {
            case CollectiveOp::Top:
                sz[i] = 1;
                break;
            case CollectiveOp::Not:
                sz[i] = 1 + sz[a.coll_left(g).id];
                break;
            case CollectiveOp::And:
                sz[i] = 1 + sz[a.coll_left(g).id] + sz[a.coll_right(g).id];
                break;
            case CollectiveOp::Group:
                sz[i] = 1 + formula_size(a, a.individual_of(g));
                break;
            case CollectiveOp::Share:
                sz[i] = 1 + formula_size(a, a.individual_of(g)) + sz[a.coll_left(g).id];
                break;
        }
    }
    return sz[c.id];
}

namespace {

void collect_ind(const FormulaArena& a, IndividualFormula f, std::set<std::string>& out) {
    switch (a.op(f)) {
        case IndividualOp::Atom:
            out.insert(a.atom_name(f));
            return;
        case IndividualOp::Top:
            return;
        case IndividualOp::Not:
        case IndividualOp::Near:
            collect_ind(a, a.left(f), out);
            return;
        default:
            collect_ind(a, a.left(f), out);
            collect_ind(a, a.right(f), out);
    }
}

}  // namespace

std::set<std::string> collect_atoms(const FormulaArena& arena, IndividualFormula f) {
    std::set<std::string> out;
    collect_ind(arena, f, out);
    return out;
}

std::set<std::string> collect_atoms(const FormulaArena& arena, CollectiveFormula c) {
    std::set<std::string> out;
    switch (arena.op(c)) {
        case CollectiveOp::Top:
            break;
        case CollectiveOp::Not: {
            out = collect_atoms(arena, arena.coll_left(c));
            break;
        }
        case CollectiveOp::And: {
            out = collect_atoms(arena, arena.coll_left(c));
            auto r = collect_atoms(arena, arena.coll_right(c));
            out.insert(r.begin(), r.end());
            break;
        }
        case CollectiveOp::Group:
            collect_ind(arena, arena.individual_of(c), out);
            break;
        case CollectiveOp::Share: {
            collect_ind(arena, arena.individual_of(c), out);
            auto r = collect_atoms(arena, arena.coll_left(c));
            out.insert(r.begin(), r.end());
            break;
        }
    }
    return out;
}

}  // namespace qdcs
