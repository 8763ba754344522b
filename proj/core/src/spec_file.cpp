#include "hammock/spec_file.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace hammock {

ParseError::ParseError(SourcePos pos, const std::string& message)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      pos_(pos),
      message_(message) {}

namespace {

struct Token {
  std::string text;
  SourcePos pos;
};

bool is_punct(char c) { return c == '{' || c == '}' || c == ';' || c == ':'; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else if (is_punct(c)) {
      out.push_back({std::string(1, c), {line, col}});
      advance();
    } else {
      Token t{{}, {line, col}};
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && !is_punct(text[i]) &&
             text[i] != '#') {
        t.text.push_back(text[i]);
        advance();
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

const std::set<std::string, std::less<>> kStatements = {"category", "mode",     "object",    "arrow",
                                                        "comp",     "weq",      "functor",   "nat",
                                                        "cylinder", "lhomotopy", "monad",    "algebra",
                                                        "idem"};

class Parser {
 public:
  Parser(std::vector<Token> tokens, SourcePos end) : tokens_(std::move(tokens)), end_(end) {}

  SpecFile parse() {
    SpecFile out;
    skip_semicolons();
    if (at_end() || peek().text != "category") error("expected 'category'");
    while (!at_end()) {
      auto kw = next();
      if (kw.text == "category") {
        CategoryDecl c;
        c.name = identifier("category name");
        out.categories.push_back(std::move(c));
      } else {
        statement(kw, out.categories.back());
      }
      skip_semicolons();
    }
    return out;
  }

 private:
  bool at_end() const { return i_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[i_]; }
  SourcePos here() const { return at_end() ? end_ : peek().pos; }
  [[noreturn]] void error(const std::string& msg) const { throw ParseError(here(), msg); }

  Token next() {
    if (at_end()) error("unexpected end of input");
    return tokens_[i_++];
  }

  void skip_semicolons() {
    while (!at_end() && peek().text == ";") ++i_;
  }

  void expect(std::string_view text) {
    if (at_end() || peek().text != text) error("expected '" + std::string(text) + "'");
    ++i_;
  }

  Named identifier(const std::string& what) {
    if (at_end()) error("expected " + what);
    const auto& t = peek();
    if (t.text.size() == 1 && is_punct(t.text[0])) error("expected " + what);
    ++i_;
    return {t.text, t.pos};
  }

  // Identifiers on the current line up to ';' or end of line.
  std::vector<Named> identifiers_on_line(std::size_t line, const std::string& what) {
    std::vector<Named> out;
    while (!at_end() && peek().pos.line == line && peek().text != ";" && !kStatements.contains(peek().text)) {
      out.push_back(identifier(what));
    }
    if (out.empty()) error("expected " + what);
    return out;
  }

  void statement(const Token& kw, CategoryDecl& c) {
    const auto& k = kw.text;
    if (k == "mode") {
      auto m = identifier("mode");
      if (m.name == "table") {
        c.mode = CategoryMode::table;
      } else if (m.name == "free-acyclic") {
        c.mode = CategoryMode::free_acyclic;
      } else {
        throw ParseError(m.pos, "expected 'table' or 'free-acyclic'");
      }
    } else if (k == "object") {
      for (auto& o : identifiers_on_line(kw.pos.line, "object name")) c.objects.push_back(std::move(o));
    } else if (k == "arrow") {
      ArrowDecl a;
      a.name = identifier("arrow name");
      expect(":");
      a.source = identifier("source object");
      expect("->");
      a.target = identifier("target object");
      c.arrows.push_back(std::move(a));
    } else if (k == "comp") {
      CompDecl d;
      d.second = identifier("morphism");
      expect(".");
      d.first = identifier("morphism");
      expect("=");
      d.result = identifier("morphism");
      c.comps.push_back(std::move(d));
    } else if (k == "weq") {
      for (auto& w : identifiers_on_line(kw.pos.line, "morphism name")) c.weqs.push_back(std::move(w));
    } else if (k == "functor") {
      c.functors.push_back(functor());
    } else if (k == "nat") {
      c.nats.push_back(nat());
    } else if (k == "cylinder") {
      c.cylinders.push_back(cylinder());
    } else if (k == "lhomotopy") {
      c.homotopies.push_back(homotopy());
    } else if (k == "monad") {
      c.monads.push_back(monad());
    } else if (k == "algebra") {
      c.algebras.push_back(algebra());
    } else if (k == "idem") {
      c.idems.push_back(idem());
    } else {
      throw ParseError(kw.pos, "unknown keyword '" + k + "'");
    }
  }

  // Runs `entry` for each keyword inside a { ... } block.
  template <class F>
  void block(F&& entry) {
    expect("{");
    skip_semicolons();
    while (true) {
      if (at_end()) error("expected '}'");
      if (peek().text == "}") {
        ++i_;
        return;
      }
      entry(next());
      skip_semicolons();
    }
  }

  Named field(std::string_view key) {
    expect(key);
    return identifier(std::string(key) + " value");
  }

  FunctorDecl functor() {
    FunctorDecl f;
    f.name = identifier("functor name");
    if (!at_end() && peek().text == ":") {
      ++i_;
      f.source = identifier("source category");
      expect("->");
      f.target = identifier("target category");
    }
    block([&](const Token& t) {
      if (t.text != "obj" && t.text != "arr") throw ParseError(t.pos, "expected 'obj' or 'arr'");
      auto a = identifier("identifier");
      expect("=>");
      auto b = identifier("identifier");
      (t.text == "obj" ? f.objects : f.arrows).push_back({std::move(a), std::move(b)});
    });
    return f;
  }

  NatDecl nat() {
    NatDecl n;
    n.name = identifier("transformation name");
    expect(":");
    n.from = identifier("functor");
    expect("=>");
    n.to = identifier("functor");
    block([&](const Token& t) {
      if (t.text != "at") throw ParseError(t.pos, "expected 'at'");
      auto o = identifier("object");
      expect(":");
      auto m = identifier("morphism");
      n.components.push_back({std::move(o), std::move(m)});
    });
    return n;
  }

  CylinderDecl cylinder() {
    CylinderDecl c;
    c.base = identifier("object");
    expect("{");
    c.cylinder = field("obj");
    c.i0 = field("i0");
    c.i1 = field("i1");
    c.p = field("p");
    skip_semicolons();
    expect("}");
    return c;
  }

  HomotopyDecl homotopy() {
    HomotopyDecl h;
    h.name = identifier("homotopy name");
    expect("{");
    h.base = field("cyl");
    h.f = field("f");
    h.g = field("g");
    h.via = field("via");
    skip_semicolons();
    expect("}");
    return h;
  }

  MonadDecl monad() {
    MonadDecl m;
    m.name = identifier("monad name");
    expect("{");
    m.functor = field("functor");
    m.eta = field("eta");
    m.mu = field("mu");
    skip_semicolons();
    expect("}");
    return m;
  }

  AlgebraDecl algebra() {
    AlgebraDecl a;
    a.name = identifier("algebra name");
    expect("{");
    a.monad = field("monad");
    a.object = field("obj");
    a.action = field("act");
    a.unit = field("unit");
    a.assoc = field("assoc");
    skip_semicolons();
    expect("}");
    return a;
  }

  IdemDecl idem() {
    IdemDecl d;
    d.name = identifier("idempotent name");
    expect("{");
    d.functor = field("functor");
    d.ell = field("ell");
    skip_semicolons();
    while (!at_end() && peek().text == "at") {
      ++i_;
      auto o = identifier("object");
      auto w = identifier("STRICT or homotopy");
      d.witnesses.push_back({std::move(o), std::move(w)});
      skip_semicolons();
    }
    expect("}");
    return d;
  }

  std::vector<Token> tokens_;
  SourcePos end_;
  std::size_t i_ = 0;
};

SourcePos end_position(std::string_view text) {
  SourcePos p;
  for (char c : text) {
    if (c == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

}  // namespace

SpecFile parse_spec(std::string_view text) {
  auto tokens = tokenize(text);
  auto end = tokens.empty() ? SourcePos{} : end_position(text);
  return Parser(std::move(tokens), end).parse();
}

std::string serialize_spec(const SpecFile& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : s.categories) {
    if (!first) os << "\n";
    first = false;
    os << "category " << c.name.name << "\n";
    os << "mode " << (c.mode == CategoryMode::table ? "table" : "free-acyclic") << "\n";
    for (const auto& o : c.objects) os << "object " << o.name << "\n";
    for (const auto& a : c.arrows) os << "arrow " << a.name.name << " : " << a.source.name << " -> " << a.target.name << "\n";
    for (const auto& d : c.comps) os << "comp " << d.second.name << " . " << d.first.name << " = " << d.result.name << "\n";
    for (const auto& w : c.weqs) os << "weq " << w.name << "\n";
    for (const auto& f : c.functors) {
      os << "functor " << f.name.name;
      if (f.source) os << " : " << f.source->name << " -> " << f.target->name;
      os << " {";
      for (const auto& [a, b] : f.objects) os << " obj " << a.name << " => " << b.name << ";";
      for (const auto& [a, b] : f.arrows) os << " arr " << a.name << " => " << b.name << ";";
      os << " }\n";
    }
    for (const auto& n : c.nats) {
      os << "nat " << n.name.name << " : " << n.from.name << " => " << n.to.name << " {";
      for (const auto& [o, m] : n.components) os << " at " << o.name << " : " << m.name << ";";
      os << " }\n";
    }
    for (const auto& y : c.cylinders) {
      os << "cylinder " << y.base.name << " { obj " << y.cylinder.name << " i0 " << y.i0.name << " i1 " << y.i1.name
         << " p " << y.p.name << " }\n";
    }
    for (const auto& h : c.homotopies) {
      os << "lhomotopy " << h.name.name << " { cyl " << h.base.name << " f " << h.f.name << " g " << h.g.name
         << " via " << h.via.name << " }\n";
    }
    for (const auto& m : c.monads) {
      os << "monad " << m.name.name << " { functor " << m.functor.name << " eta " << m.eta.name << " mu "
         << m.mu.name << " }\n";
    }
    for (const auto& a : c.algebras) {
      os << "algebra " << a.name.name << " { monad " << a.monad.name << " obj " << a.object.name << " act "
         << a.action.name << " unit " << a.unit.name << " assoc " << a.assoc.name << " }\n";
    }
    for (const auto& d : c.idems) {
      os << "idem " << d.name.name << " { functor " << d.functor.name << " ell " << d.ell.name;
      for (const auto& [o, w] : d.witnesses) os << " at " << o.name << " " << w.name;
      os << " }\n";
    }
  }
  return os.str();
}

CategoryDecl to_decl(const RelCat& r) {
  const FinCat& c = r.cat();
  CategoryDecl d;
  d.name = {c.name(), {}};
  d.mode = CategoryMode::table;
  for (auto o : c.objects()) {
    if (c.morphism_name(c.identity(o)) != "id_" + c.object_name(o)) {
      throw std::invalid_argument("identity of " + c.object_name(o) + " is not named id_" + c.object_name(o));
    }
    d.objects.push_back({c.object_name(o), {}});
  }
  for (auto m : c.morphisms()) {
    if (c.is_identity(m)) continue;
    d.arrows.push_back({{c.morphism_name(m), {}}, {c.object_name(c.source(m)), {}}, {c.object_name(c.target(m)), {}}});
  }
  for (auto f : c.morphisms()) {
    if (c.is_identity(f)) continue;
    for (auto g : c.morphisms_from(c.target(f))) {
      if (c.is_identity(g)) continue;
      d.comps.push_back({{c.morphism_name(g), {}}, {c.morphism_name(f), {}}, {c.morphism_name(c.comp(g, f)), {}}});
    }
  }
  for (auto w : r.weqs()) {
    if (!c.is_identity(w)) d.weqs.push_back({c.morphism_name(w), {}});
  }
  return d;
}

// ---------------------------------------------------------------------------
// Resolution.

const std::shared_ptr<const RelCat>& Model::primary() const { return categories.at(order.front()); }

const std::shared_ptr<const RelCat>& Model::category(const std::string& name) const {
  auto it = categories.find(name);
  if (it == categories.end()) throw std::out_of_range("unknown category " + name);
  return it->second;
}

namespace {

class Resolver {
 public:
  explicit Resolver(Model& m) : m_(m) {}

  void category(const CategoryDecl& d) {
    if (m_.categories.contains(d.name.name)) throw ParseError(d.name.pos, "duplicate category '" + d.name.name + "'");
    std::shared_ptr<const FinCat> cat;
    std::set<std::string> objects;
    for (const auto& o : d.objects) {
      if (!objects.insert(o.name).second) throw ParseError(o.pos, "duplicate object '" + o.name + "'");
    }
    auto need_object = [&](const Named& n) {
      if (!objects.contains(n.name)) throw ParseError(n.pos, "unknown object '" + n.name + "'");
    };
    for (const auto& a : d.arrows) {
      need_object(a.source);
      need_object(a.target);
    }
    if (d.mode == CategoryMode::free_acyclic) {
      if (!d.comps.empty()) throw ParseError(d.comps.front().second.pos, "comp is not allowed in free-acyclic mode");
      FreeGraph g{d.name.name, {}, {}};
      for (const auto& o : d.objects) g.vertices.push_back(o.name);
      for (const auto& a : d.arrows) g.edges.push_back({a.name.name, a.source.name, a.target.name});
      cat = std::make_shared<const FinCat>(free_acyclic(g));
    } else {
      RawCategory raw;
      raw.name = d.name.name;
      std::map<std::string, std::pair<std::string, std::string>> types;
      for (const auto& o : d.objects) {
        raw.objects.push_back(o.name);
        auto id = "id_" + o.name;
        raw.identities[o.name] = id;
        types[id] = {o.name, o.name};
      }
      for (const auto& a : d.arrows) {
        auto it = types.find(a.name.name);
        if (it != types.end()) {
          if (raw.identities.contains(a.source.name) && raw.identities[a.source.name] == a.name.name &&
              a.source.name == a.target.name) {
            continue;  // explicit identity declaration
          }
          throw ParseError(a.name.pos, "duplicate arrow '" + a.name.name + "'");
        }
        types[a.name.name] = {a.source.name, a.target.name};
      }
      for (const auto& [name, st] : types) raw.morphisms.push_back({name, st.first, st.second});
      std::set<std::pair<std::string, std::string>> given;
      for (const auto& cd : d.comps) {
        for (const auto* n : {&cd.second, &cd.first, &cd.result}) {
          if (!types.contains(n->name)) throw ParseError(n->pos, "unknown arrow '" + n->name + "'");
        }
        raw.compositions.push_back({cd.second.name, cd.first.name, cd.result.name});
        given.insert({cd.second.name, cd.first.name});
      }
      for (const auto& [name, st] : types) {
        auto left = "id_" + st.second;
        auto right = "id_" + st.first;
        if (!given.contains({left, name})) raw.compositions.push_back({left, name, name});
        if (!given.contains({name, right}) && !(left == right && left == name)) {
          raw.compositions.push_back({name, right, name});
        }
      }
      cat = std::make_shared<const FinCat>(FinCat::validate(raw));
    }
    std::vector<MorphismId> weq;
    for (auto o : cat->objects()) weq.push_back(cat->identity(o));
    for (const auto& w : d.weqs) weq.push_back(morphism(*cat, w));
    auto r = std::make_shared<const RelCat>(RelCat::validate(cat, weq));
    m_.categories[d.name.name] = r;
    m_.order.push_back(d.name.name);

    for (const auto& f : d.functors) functor(f, d.name.name);
    for (const auto& n : d.nats) nat(n, d.name.name);
    for (const auto& c : d.cylinders) cylinder(c, d.name.name);
    for (const auto& h : d.homotopies) homotopy(h, d.name.name);
    for (const auto& mo : d.monads) monad(mo, d.name.name);
    for (const auto& a : d.algebras) algebra(a, d.name.name);
    for (const auto& i : d.idems) idem(i, d.name.name);
  }

 private:
  static ObjectId object(const FinCat& c, const Named& n) {
    auto o = c.find_object(n.name);
    if (!o) throw ParseError(n.pos, "unknown object '" + n.name + "' in " + c.name());
    return *o;
  }
  static MorphismId morphism(const FinCat& c, const Named& n) {
    auto m = c.find_morphism(n.name);
    if (!m) throw ParseError(n.pos, "unknown arrow '" + n.name + "' in " + c.name());
    return *m;
  }

  const std::shared_ptr<const RelCat>& category_named(const Named& n) {
    auto it = m_.categories.find(n.name);
    if (it == m_.categories.end()) throw ParseError(n.pos, "unknown category '" + n.name + "'");
    return it->second;
  }

  template <class Map>
  void fresh(const Map& map, const Named& n, const char* what) {
    if (map.contains(n.name)) throw ParseError(n.pos, std::string("duplicate ") + what + " '" + n.name + "'");
  }

  void functor(const FunctorDecl& d, const std::string& owner) {
    fresh(m_.functors, d.name, "functor");
    if (d.name.name == "Id") throw ParseError(d.name.pos, "'Id' is reserved");
    auto src = d.source ? category_named(*d.source) : m_.categories.at(owner);
    auto tgt = d.target ? category_named(*d.target) : m_.categories.at(owner);
    const FinCat& s = src->cat();
    const FinCat& t = tgt->cat();
    FunctorData f{d.name.name, src->cat_ptr(), tgt->cat_ptr(), {}, {}};
    std::vector<std::optional<ObjectId>> objs(s.object_count());
    std::vector<std::optional<MorphismId>> arrs(s.morphism_count());
    for (const auto& [a, b] : d.objects) {
      auto o = object(s, a);
      if (objs[o.value]) throw ParseError(a.pos, "object '" + a.name + "' mapped twice");
      objs[o.value] = object(t, b);
    }
    for (const auto& [a, b] : d.arrows) {
      auto m = morphism(s, a);
      if (arrs[m.value]) throw ParseError(a.pos, "arrow '" + a.name + "' mapped twice");
      arrs[m.value] = morphism(t, b);
    }
    for (auto o : s.objects()) {
      if (!objs[o.value]) throw ParseError(d.name.pos, "functor '" + d.name.name + "' does not map object '" + s.object_name(o) + "'");
      f.object_map.push_back(*objs[o.value]);
    }
    for (auto m : s.morphisms()) {
      if (!arrs[m.value] && s.is_identity(m)) arrs[m.value] = t.identity(*objs[s.source(m).value]);
    }
    // Unmapped arrows that factor through mapped ones take the composite image.
    for (bool changed = true; changed;) {
      changed = false;
      for (auto m : s.morphisms()) {
        if (arrs[m.value]) continue;
        for (auto a : s.morphisms_from(s.source(m))) {
          if (!arrs[a.value] || s.is_identity(a)) continue;
          for (auto b : s.morphisms_from(s.target(a))) {
            if (!arrs[b.value] || s.is_identity(b) || s.comp(b, a) != m) continue;
            if (t.target(*arrs[a.value]) != t.source(*arrs[b.value])) continue;
            arrs[m.value] = t.comp(*arrs[b.value], *arrs[a.value]);
            break;
          }
          if (arrs[m.value]) break;
        }
        changed = changed || arrs[m.value].has_value();
      }
    }
    for (auto m : s.morphisms()) {
      if (!arrs[m.value]) {
        throw ParseError(d.name.pos, "functor '" + d.name.name + "' does not map arrow '" + s.morphism_name(m) + "'");
      }
      f.morphism_map.push_back(*arrs[m.value]);
    }
    m_.functors.emplace(d.name.name, std::move(f));
  }

  FunctorData functor_expression(const Named& n, const std::string& owner) {
    if (n.name == "Id") return identity_functor_data(m_.categories.at(owner)->cat_ptr());
    if (auto it = m_.functors.find(n.name); it != m_.functors.end()) return it->second;
    std::vector<std::string> parts;
    std::stringstream ss(n.name);
    for (std::string p; std::getline(ss, p, '.');) parts.push_back(p);
    if (parts.size() < 2) throw ParseError(n.pos, "unknown functor '" + n.name + "'");
    std::optional<FunctorData> acc;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      auto f = functor_expression({*it, n.pos}, owner);
      if (acc && acc->target.get() != f.source.get()) throw ParseError(n.pos, "functors in '" + n.name + "' do not compose");
      acc = acc ? compose(f, *acc) : f;
    }
    acc->name = n.name;
    return *acc;
  }

  void nat(const NatDecl& d, const std::string& owner) {
    fresh(m_.nats, d.name, "transformation");
    auto from = functor_expression(d.from, owner);
    auto to = functor_expression(d.to, owner);
    if (from.source.get() != to.source.get() || from.target.get() != to.target.get()) {
      throw ParseError(d.to.pos, "functors of '" + d.name.name + "' do not share source and target");
    }
    const FinCat& s = *from.source;
    const FinCat& t = *from.target;
    std::vector<std::optional<MorphismId>> comps(s.object_count());
    for (const auto& [o, m] : d.components) {
      auto x = object(s, o);
      if (comps[x.value]) throw ParseError(o.pos, "component at '" + o.name + "' given twice");
      comps[x.value] = morphism(t, m);
    }
    NatTransData eta{d.name.name, from, to, {}};
    for (auto o : s.objects()) {
      if (!comps[o.value]) throw ParseError(d.name.pos, "transformation '" + d.name.name + "' has no component at '" + s.object_name(o) + "'");
      eta.components.push_back(*comps[o.value]);
    }
    m_.nats.emplace(d.name.name, std::move(eta));
  }

  void cylinder(const CylinderDecl& d, const std::string& owner) {
    const FinCat& c = m_.categories.at(owner)->cat();
    auto& cyls = m_.cylinders[owner];
    if (cyls.contains(d.base.name)) throw ParseError(d.base.pos, "duplicate cylinder for '" + d.base.name + "'");
    cyls[d.base.name] = CylinderData{object(c, d.base), object(c, d.cylinder), morphism(c, d.i0), morphism(c, d.i1),
                                     morphism(c, d.p)};
  }

  void homotopy(const HomotopyDecl& d, const std::string& owner) {
    fresh(m_.homotopies, d.name, "homotopy");
    const FinCat& c = m_.categories.at(owner)->cat();
    auto& cyls = m_.cylinders[owner];
    auto it = cyls.find(d.base.name);
    if (it == cyls.end()) throw ParseError(d.base.pos, "no cylinder declared for '" + d.base.name + "'");
    m_.homotopies.emplace(d.name.name, LeftHomotopyData{it->second, morphism(c, d.f), morphism(c, d.g), morphism(c, d.via)});
    m_.homotopy_category[d.name.name] = owner;
  }

  HomotopyWitness witness(const Named& n, const std::string& owner) {
    if (n.name == "STRICT") return Strict{};
    auto it = m_.homotopies.find(n.name);
    if (it == m_.homotopies.end() || m_.homotopy_category[n.name] != owner) {
      throw ParseError(n.pos, "unknown homotopy '" + n.name + "'");
    }
    return it->second;
  }

  FunctorData endofunctor(const Named& n, const std::string& owner) {
    auto f = functor_expression(n, owner);
    auto self = m_.categories.at(owner)->cat_ptr();
    if (f.source != self || f.target != self) throw ParseError(n.pos, "'" + n.name + "' is not an endofunctor of " + owner);
    return f;
  }

  NatTransData transformation(const Named& n) {
    auto it = m_.nats.find(n.name);
    if (it == m_.nats.end()) throw ParseError(n.pos, "unknown transformation '" + n.name + "'");
    return it->second;
  }

  void monad(const MonadDecl& d, const std::string& owner) {
    fresh(m_.monads, d.name, "monad");
    m_.monads.emplace(d.name.name, MonadData{d.name.name, endofunctor(d.functor, owner), transformation(d.eta),
                                             transformation(d.mu)});
    m_.monad_category[d.name.name] = owner;
  }

  void algebra(const AlgebraDecl& d, const std::string& owner) {
    fresh(m_.algebras, d.name, "algebra");
    auto it = m_.monads.find(d.monad.name);
    if (it == m_.monads.end() || m_.monad_category[d.monad.name] != owner) {
      throw ParseError(d.monad.pos, "unknown monad '" + d.monad.name + "'");
    }
    const FinCat& c = m_.categories.at(owner)->cat();
    m_.algebras.emplace(d.name.name, HoAlgebraData{d.name.name, it->second, object(c, d.object), morphism(c, d.action),
                                                   witness(d.unit, owner), witness(d.assoc, owner)});
    m_.algebra_category[d.name.name] = owner;
  }

  void idem(const IdemDecl& d, const std::string& owner) {
    fresh(m_.idems, d.name, "idempotent");
    const FinCat& c = m_.categories.at(owner)->cat();
    IdempotentData data{d.name.name, endofunctor(d.functor, owner), transformation(d.ell), {}};
    for (const auto& [o, w] : d.witnesses) {
      auto x = object(c, o);
      if (data.witnesses.contains(x)) throw ParseError(o.pos, "witness at '" + o.name + "' given twice");
      data.witnesses.emplace(x, witness(w, owner));
    }
    m_.idems.emplace(d.name.name, std::move(data));
    m_.idem_category[d.name.name] = owner;
  }

  Model& m_;
};

}  // namespace

Model load_model(const SpecFile& s) {
  Model m;
  Resolver r(m);
  for (const auto& c : s.categories) r.category(c);
  return m;
}

Model load_model_text(std::string_view text) { return load_model(parse_spec(text)); }

Model load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return load_model_text(os.str());
}

}  // namespace hammock
