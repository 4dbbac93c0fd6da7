#include "smc/document.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace smc {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

struct Parser {
    std::vector<Diagnostic> diags;

    std::string kind, name;
    bool saw_kind = false;

    // category side
    std::vector<std::string> objects;
    std::map<std::string, int> obj_id;
    struct MorDecl {
        std::string name;
        int src, dst, line;
    };
    std::vector<MorDecl> morphisms;
    std::map<std::string, int> mor_id;
    std::map<int, std::pair<int, int>> identity_stmts;      // object -> (mor, line)
    std::map<std::pair<int, int>, std::pair<int, int>> compose_stmts;  // (g,f) -> (h, line)

    bool monoidal_section = false;
    std::optional<int> unit;
    std::map<std::pair<int, int>, int> tensor_obj_stmts;
    std::map<std::pair<int, int>, int> tensor_mor_stmts;
    bool assoc_strict = false, lunit_strict = false, runit_strict = false,
         braiding_strict = false, braiding_none = false;
    std::map<std::tuple<int, int, int>, int> assoc_stmts;
    std::map<int, int> lunit_stmts, runit_stmts;
    std::map<std::pair<int, int>, int> braiding_stmts;
    bool symmetric = false;

    // monoid side
    std::vector<std::string> elements;
    std::map<std::string, int> elem_id;
    std::map<std::pair<int, int>, int> op_stmts;
    bool commutative = false;

    void error(int line, const std::string& message) { diags.push_back({line, message}); }

    int lookup(const std::map<std::string, int>& table, const std::string& id, int line,
               const std::string& sort) {
        auto it = table.find(id);
        if (it == table.end()) {
            error(line, "dangling " + sort + " reference '" + id + "'");
            return -1;
        }
        return it->second;
    }

    void parse_line(int line_no, const std::vector<std::string>& t) {
        const std::string& head = t[0];
        auto require_arity = [&](std::size_t n, const char* shape) {
            if (t.size() != n) {
                error(line_no, "malformed '" + head + "' statement; expected: " + shape);
                return false;
            }
            return true;
        };

        if (head == "kind:") {
            if (!require_arity(2, "kind: category|monoid")) return;
            if (t[1] != "category" && t[1] != "monoid") {
                error(line_no, "kind must be 'category' or 'monoid'");
                return;
            }
            kind = t[1];
            saw_kind = true;
        } else if (head == "name:") {
            if (!require_arity(2, "name: IDENT")) return;
            name = t[1];
        } else if (head == "objects:") {
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (obj_id.count(t[i])) {
                    error(line_no, "duplicate object identifier '" + t[i] + "'");
                    continue;
                }
                obj_id[t[i]] = static_cast<int>(objects.size());
                objects.push_back(t[i]);
            }
        } else if (head == "morphism") {
            if (!require_arity(6, "morphism NAME : SRC -> DST") ||
                t[2] != ":" || t[4] != "->") {
                if (t.size() == 6 && (t[2] != ":" || t[4] != "->"))
                    error(line_no, "malformed 'morphism' statement; expected: morphism NAME"
                                   " : SRC -> DST");
                return;
            }
            if (mor_id.count(t[1])) {
                error(line_no, "duplicate morphism identifier '" + t[1] + "'");
                return;
            }
            int s = lookup(obj_id, t[3], line_no, "object");
            int d = lookup(obj_id, t[5], line_no, "object");
            mor_id[t[1]] = static_cast<int>(morphisms.size());
            morphisms.push_back({t[1], s, d, line_no});
        } else if (head == "identity") {
            if (!require_arity(4, "identity OBJECT = MORPHISM") || t[2] != "=") return;
            int x = lookup(obj_id, t[1], line_no, "object");
            int f = lookup(mor_id, t[3], line_no, "morphism");
            if (x < 0 || f < 0) return;
            if (identity_stmts.count(x)) {
                error(line_no, "duplicate identity for object '" + t[1] + "'");
                return;
            }
            identity_stmts[x] = {f, line_no};
        } else if (head == "compose") {
            if (!require_arity(6, "compose G . F = H") || t[2] != "." || t[4] != "=") return;
            int g = lookup(mor_id, t[1], line_no, "morphism");
            int f = lookup(mor_id, t[3], line_no, "morphism");
            int h = lookup(mor_id, t[5], line_no, "morphism");
            if (g < 0 || f < 0 || h < 0) return;
            if (compose_stmts.count({g, f})) {
                error(line_no, "duplicate compose entry for (" + t[1] + ", " + t[3] + ")");
                return;
            }
            compose_stmts[{g, f}] = {h, line_no};
        } else if (head == "unit:") {
            if (!require_arity(2, "unit: OBJECT|ELEMENT")) return;
            monoidal_section = true;
            int u = kind == "monoid" ? lookup(elem_id, t[1], line_no, "element")
                                     : lookup(obj_id, t[1], line_no, "object");
            if (u >= 0) unit = u;
        } else if (head == "tensor_obj") {
            if (!require_arity(5, "tensor_obj X Y = Z") || t[3] != "=") return;
            monoidal_section = true;
            int x = lookup(obj_id, t[1], line_no, "object");
            int y = lookup(obj_id, t[2], line_no, "object");
            int z = lookup(obj_id, t[4], line_no, "object");
            if (x < 0 || y < 0 || z < 0) return;
            if (tensor_obj_stmts.count({x, y})) {
                error(line_no, "duplicate tensor_obj entry");
                return;
            }
            tensor_obj_stmts[{x, y}] = z;
        } else if (head == "tensor_mor") {
            if (!require_arity(5, "tensor_mor F G = H") || t[3] != "=") return;
            monoidal_section = true;
            int f = lookup(mor_id, t[1], line_no, "morphism");
            int g = lookup(mor_id, t[2], line_no, "morphism");
            int h = lookup(mor_id, t[4], line_no, "morphism");
            if (f < 0 || g < 0 || h < 0) return;
            if (tensor_mor_stmts.count({f, g})) {
                error(line_no, "duplicate tensor_mor entry");
                return;
            }
            tensor_mor_stmts[{f, g}] = h;
        } else if (head == "assoc" || head == "assoc:") {
            monoidal_section = true;
            if (head == "assoc:" && t.size() == 2 && t[1] == "strict") {
                assoc_strict = true;
                return;
            }
            if (!require_arity(6, "assoc X Y Z = MOR (or assoc: strict)") || t[4] != "=")
                return;
            int x = lookup(obj_id, t[1], line_no, "object");
            int y = lookup(obj_id, t[2], line_no, "object");
            int z = lookup(obj_id, t[3], line_no, "object");
            int f = lookup(mor_id, t[5], line_no, "morphism");
            if (x < 0 || y < 0 || z < 0 || f < 0) return;
            assoc_stmts[{x, y, z}] = f;
        } else if (head == "lunit" || head == "lunit:") {
            monoidal_section = true;
            if (head == "lunit:" && t.size() == 2 && t[1] == "strict") {
                lunit_strict = true;
                return;
            }
            if (!require_arity(4, "lunit X = MOR (or lunit: strict)") || t[2] != "=") return;
            int x = lookup(obj_id, t[1], line_no, "object");
            int f = lookup(mor_id, t[3], line_no, "morphism");
            if (x < 0 || f < 0) return;
            lunit_stmts[x] = f;
        } else if (head == "runit" || head == "runit:") {
            monoidal_section = true;
            if (head == "runit:" && t.size() == 2 && t[1] == "strict") {
                runit_strict = true;
                return;
            }
            if (!require_arity(4, "runit X = MOR (or runit: strict)") || t[2] != "=") return;
            int x = lookup(obj_id, t[1], line_no, "object");
            int f = lookup(mor_id, t[3], line_no, "morphism");
            if (x < 0 || f < 0) return;
            runit_stmts[x] = f;
        } else if (head == "braiding" || head == "braiding:") {
            monoidal_section = true;
            if (head == "braiding:" && t.size() == 2 && (t[1] == "strict" || t[1] == "none")) {
                (t[1] == "strict" ? braiding_strict : braiding_none) = true;
                return;
            }
            if (!require_arity(5, "braiding X Y = MOR (or braiding: strict|none)") ||
                t[3] != "=")
                return;
            int x = lookup(obj_id, t[1], line_no, "object");
            int y = lookup(obj_id, t[2], line_no, "object");
            int f = lookup(mor_id, t[4], line_no, "morphism");
            if (x < 0 || y < 0 || f < 0) return;
            braiding_stmts[{x, y}] = f;
        } else if (head == "symmetric:") {
            if (!require_arity(2, "symmetric: true|false")) return;
            symmetric = t[1] == "true";
        } else if (head == "elements:") {
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (elem_id.count(t[i])) {
                    error(line_no, "duplicate element identifier '" + t[i] + "'");
                    continue;
                }
                elem_id[t[i]] = static_cast<int>(elements.size());
                elements.push_back(t[i]);
            }
        } else if (head == "op") {
            if (!require_arity(5, "op A B = C") || t[3] != "=") return;
            int a = lookup(elem_id, t[1], line_no, "element");
            int b = lookup(elem_id, t[2], line_no, "element");
            int c = lookup(elem_id, t[4], line_no, "element");
            if (a < 0 || b < 0 || c < 0) return;
            if (op_stmts.count({a, b})) {
                error(line_no, "duplicate op entry");
                return;
            }
            op_stmts[{a, b}] = c;
        } else if (head == "commutative:") {
            if (!require_arity(2, "commutative: true|false")) return;
            commutative = t[1] == "true";
        } else {
            error(line_no, "unknown statement '" + head + "'");
        }
    }

    std::optional<CategoryDocument> finish() {
        if (!saw_kind) error(0, "missing field: kind");
        if (name.empty()) error(0, "missing field: name");
        if (!diags.empty()) return std::nullopt;
        if (kind == "monoid") return finish_monoid();
        return finish_category();
    }

    std::optional<CategoryDocument> finish_monoid() {
        FinMonoid m;
        m.name = name;
        m.elements = elements;
        if (elements.empty()) error(0, "missing field: elements");
        if (!unit) error(0, "missing field: unit");
        const int n = static_cast<int>(elements.size());
        m.op_table.assign(static_cast<std::size_t>(n) * n, -1);
        for (auto& [key, val] : op_stmts)
            m.op_table[static_cast<std::size_t>(key.first) * n + key.second] = val;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!elements.empty() &&
                    m.op_table[static_cast<std::size_t>(a) * n + b] < 0)
                    error(0, "missing op entry for (" + elements[a] + ", " + elements[b] +
                             ")");
        if (!diags.empty()) return std::nullopt;
        m.unit = *unit;
        m.commutative = commutative;
        CategoryDocument doc;
        doc.name = name;
        doc.monoid = std::move(m);
        return doc;
    }

    std::optional<CategoryDocument> finish_category() {
        if (objects.empty() && morphisms.empty() && monoidal_section)
            error(0, "monoidal tables without any objects");
        auto cat = std::make_shared<FinCategory>();
        cat->name = name;
        cat->objects = objects;
        for (const MorDecl& m : morphisms) cat->morphisms.push_back({m.name, m.src, m.dst});
        cat->identities.assign(objects.size(), -1);
        for (auto& [obj, val] : identity_stmts) cat->identities[obj] = val.first;
        for (std::size_t x = 0; x < objects.size(); ++x)
            if (cat->identities[x] < 0)
                error(0, "missing identity for object '" + objects[x] + "'");
        const int n_mor = static_cast<int>(morphisms.size());
        cat->compose_table.assign(static_cast<std::size_t>(n_mor) * n_mor, -1);
        for (auto& [key, val] : compose_stmts) {
            if (morphisms[key.second].dst != morphisms[key.first].src)
                error(val.second, "compose entry for a non-composable pair (" +
                                      morphisms[key.first].name + ", " +
                                      morphisms[key.second].name + ")");
            else
                cat->compose_table[static_cast<std::size_t>(key.first) * n_mor +
                                   key.second] = val.first;
        }
        for (int g = 0; g < n_mor; ++g)
            for (int f = 0; f < n_mor; ++f)
                if (morphisms[f].dst == morphisms[g].src &&
                    cat->compose_table[static_cast<std::size_t>(g) * n_mor + f] < 0)
                    error(morphisms[g].line, "missing compose entry for (" +
                                                 morphisms[g].name + ", " +
                                                 morphisms[f].name + ")");
        if (!diags.empty()) return std::nullopt;

        CategoryDocument doc;
        doc.name = name;
        doc.category = cat;
        if (!monoidal_section) return doc;

        auto mon = std::make_shared<MonoidalStructure>();
        mon->base = cat;
        if (!unit) {
            error(0, "missing field: unit");
            return std::nullopt;
        }
        mon->unit = *unit;
        const int n_obj = static_cast<int>(objects.size());
        mon->tensor_obj_table.assign(static_cast<std::size_t>(n_obj) * n_obj, -1);
        for (auto& [key, val] : tensor_obj_stmts)
            mon->tensor_obj_table[static_cast<std::size_t>(key.first) * n_obj + key.second] =
                val;
        for (int x = 0; x < n_obj; ++x)
            for (int y = 0; y < n_obj; ++y)
                if (mon->tensor_obj_table[static_cast<std::size_t>(x) * n_obj + y] < 0)
                    error(0, "missing tensor_obj entry for (" + objects[x] + ", " +
                             objects[y] + ")");
        mon->tensor_mor_table.assign(static_cast<std::size_t>(n_mor) * n_mor, -1);
        for (auto& [key, val] : tensor_mor_stmts)
            mon->tensor_mor_table[static_cast<std::size_t>(key.first) * n_mor + key.second] =
                val;
        for (int f = 0; f < n_mor; ++f)
            for (int g = 0; g < n_mor; ++g)
                if (mon->tensor_mor_table[static_cast<std::size_t>(f) * n_mor + g] < 0)
                    error(0, "missing tensor_mor entry for (" + morphisms[f].name + ", " +
                             morphisms[g].name + ")");
        if (!diags.empty()) return std::nullopt;

        auto strict_identity = [&](int src_obj, int dst_obj, const std::string& what,
                                   auto tuple_text) -> int {
            if (src_obj != dst_obj) {
                error(0, what + ": strict requires equal bracketings at " + tuple_text());
                return -1;
            }
            return cat->identities[src_obj];
        };

        mon->assoc_table.assign(static_cast<std::size_t>(n_obj) * n_obj * n_obj, -1);
        for (int x = 0; x < n_obj; ++x)
            for (int y = 0; y < n_obj; ++y)
                for (int z = 0; z < n_obj; ++z) {
                    std::size_t idx = (static_cast<std::size_t>(x) * n_obj + y) * n_obj + z;
                    auto it = assoc_stmts.find({x, y, z});
                    if (it != assoc_stmts.end())
                        mon->assoc_table[idx] = it->second;
                    else if (assoc_strict)
                        mon->assoc_table[idx] = strict_identity(
                            mon->tensor_obj(mon->tensor_obj(x, y), z),
                            mon->tensor_obj(x, mon->tensor_obj(y, z)), "assoc", [&] {
                                return "(" + objects[x] + ", " + objects[y] + ", " +
                                       objects[z] + ")";
                            });
                    else
                        error(0, "missing assoc entry for (" + objects[x] + ", " +
                                 objects[y] + ", " + objects[z] + ")");
                }
        mon->lunit_table.assign(n_obj, -1);
        mon->runit_table.assign(n_obj, -1);
        for (int x = 0; x < n_obj; ++x) {
            auto lit = lunit_stmts.find(x);
            if (lit != lunit_stmts.end())
                mon->lunit_table[x] = lit->second;
            else if (lunit_strict)
                mon->lunit_table[x] =
                    strict_identity(mon->tensor_obj(mon->unit, x), x, "lunit",
                                    [&] { return "(" + objects[x] + ")"; });
            else
                error(0, "missing lunit entry for " + objects[x]);
            auto rit = runit_stmts.find(x);
            if (rit != runit_stmts.end())
                mon->runit_table[x] = rit->second;
            else if (runit_strict)
                mon->runit_table[x] =
                    strict_identity(mon->tensor_obj(x, mon->unit), x, "runit",
                                    [&] { return "(" + objects[x] + ")"; });
            else
                error(0, "missing runit entry for " + objects[x]);
        }
        bool want_braiding = braiding_strict || !braiding_stmts.empty();
        if (symmetric && braiding_none)
            error(0, "symmetric: true conflicts with braiding: none");
        if (symmetric && !want_braiding && !braiding_none)
            error(0, "symmetric: true requires a braiding");
        if (want_braiding) {
            std::vector<int> braid(static_cast<std::size_t>(n_obj) * n_obj, -1);
            for (int x = 0; x < n_obj; ++x)
                for (int y = 0; y < n_obj; ++y) {
                    auto it = braiding_stmts.find({x, y});
                    if (it != braiding_stmts.end())
                        braid[static_cast<std::size_t>(x) * n_obj + y] = it->second;
                    else if (braiding_strict)
                        braid[static_cast<std::size_t>(x) * n_obj + y] = strict_identity(
                            mon->tensor_obj(x, y), mon->tensor_obj(y, x), "braiding", [&] {
                                return "(" + objects[x] + ", " + objects[y] + ")";
                            });
                    else
                        error(0, "missing braiding entry for (" + objects[x] + ", " +
                                 objects[y] + ")");
                }
            mon->braiding_table = std::move(braid);
        }
        mon->symmetric = symmetric;
        if (!diags.empty()) return std::nullopt;
        doc.monoidal = mon;
        return doc;
    }
};

}  // namespace

ParseResult parse_document(const std::string& text) {
    Parser parser;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        parser.parse_line(line_no, tokens);
    }
    ParseResult out;
    out.doc = parser.finish();
    out.diagnostics = std::move(parser.diags);
    return out;
}

std::string serialize_document(const CategoryDocument& doc) {
    std::ostringstream out;
    if (doc.is_monoid()) {
        const FinMonoid& m = *doc.monoid;
        out << "kind: monoid\n"
            << "name: " << doc.name << "\n"
            << "elements:";
        for (const auto& e : m.elements) out << " " << e;
        out << "\nunit: " << m.elements[m.unit] << "\n";
        for (int a = 0; a < m.size(); ++a)
            for (int b = 0; b < m.size(); ++b)
                out << "op " << m.elements[a] << " " << m.elements[b] << " = "
                    << m.elements[m.op(a, b)] << "\n";
        out << "commutative: " << (m.commutative ? "true" : "false") << "\n";
        return out.str();
    }

    const FinCategory& c = *doc.category;
    out << "kind: category\n"
        << "name: " << doc.name << "\n"
        << "objects:";
    for (const auto& o : c.objects) out << " " << o;
    out << "\n";
    for (const auto& m : c.morphisms)
        out << "morphism " << m.name << " : " << c.objects[m.src] << " -> "
            << c.objects[m.dst] << "\n";
    for (int x = 0; x < c.num_objects(); ++x)
        out << "identity " << c.objects[x] << " = " << c.morphism_name(c.identity(x))
            << "\n";
    for (int g = 0; g < c.num_morphisms(); ++g)
        for (int f = 0; f < c.num_morphisms(); ++f)
            if (c.composable(g, f))
                out << "compose " << c.morphism_name(g) << " . " << c.morphism_name(f)
                    << " = " << c.morphism_name(c.compose(g, f)) << "\n";
    if (!doc.monoidal) return out.str();

    const MonoidalStructure& mon = *doc.monoidal;
    out << "unit: " << c.object_name(mon.unit) << "\n";
    for (int x = 0; x < c.num_objects(); ++x)
        for (int y = 0; y < c.num_objects(); ++y)
            out << "tensor_obj " << c.object_name(x) << " " << c.object_name(y) << " = "
                << c.object_name(mon.tensor_obj(x, y)) << "\n";
    for (int f = 0; f < c.num_morphisms(); ++f)
        for (int g = 0; g < c.num_morphisms(); ++g)
            out << "tensor_mor " << c.morphism_name(f) << " " << c.morphism_name(g) << " = "
                << c.morphism_name(mon.tensor_mor(f, g)) << "\n";
    for (int x = 0; x < c.num_objects(); ++x)
        for (int y = 0; y < c.num_objects(); ++y)
            for (int z = 0; z < c.num_objects(); ++z)
                out << "assoc " << c.object_name(x) << " " << c.object_name(y) << " "
                    << c.object_name(z) << " = " << c.morphism_name(mon.assoc(x, y, z))
                    << "\n";
    for (int x = 0; x < c.num_objects(); ++x)
        out << "lunit " << c.object_name(x) << " = " << c.morphism_name(mon.lunit(x))
            << "\n";
    for (int x = 0; x < c.num_objects(); ++x)
        out << "runit " << c.object_name(x) << " = " << c.morphism_name(mon.runit(x))
            << "\n";
    if (mon.braided()) {
        for (int x = 0; x < c.num_objects(); ++x)
            for (int y = 0; y < c.num_objects(); ++y)
                out << "braiding " << c.object_name(x) << " " << c.object_name(y) << " = "
                    << c.morphism_name(mon.braiding(x, y)) << "\n";
    } else {
        out << "braiding: none\n";
    }
    out << "symmetric: " << (mon.symmetric ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace smc
