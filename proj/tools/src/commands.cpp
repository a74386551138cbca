#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "json.hpp"
#include "slu/closure.hpp"
#include "slu/error.hpp"
#include "slu/io.hpp"
#include "slu/iso.hpp"
#include "slu/leonids.hpp"
#include "slu/translation.hpp"

namespace slu::cli {

namespace {

std::unique_ptr<SL2> group_for(unsigned q) {
  const auto pp = prime_power(q);
  return std::make_unique<SL2>(pp.p, pp.e);
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  return in;
}

// Writes through `fn` to the file named by `path`, or stdout when empty.
template <class Fn>
void emit(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
  fn(out);
}

std::string points(const std::vector<Point>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + std::to_string(pts[i]);
  return s + "}";
}

Parallelism load_para(const SL2& g, const std::string& path) {
  auto in = open_in(path);
  const auto f = read_para(in);
  const auto classes = resolve_classes(g, f);
  const auto rep = verify_parallelism(g, classes);
  if (!rep.ok) throw Error(ErrorKind::InvalidParallelism, path + ": " + rep.violation);
  return Parallelism::from_classes(g.block_count(), classes);
}

unsigned para_q(const std::string& path) {
  auto in = open_in(path);
  return read_para(in).q;
}

Design load_design(const std::string& path) {
  auto in = open_in(path);
  return read_blocks(in);
}

// Order n with n^3 + 1 = v.
unsigned unital_order(const Design& d) {
  for (unsigned n = 2; std::uint64_t{n} * n * n + 1 <= d.v; ++n)
    if (std::uint64_t{n} * n * n + 1 == d.v) return n;
  throw Error(ErrorKind::Parse, "point count " + std::to_string(d.v) + " is not n^3 + 1");
}

Subgroup choose_subgroup(const SL2& g, const std::string& which) {
  if (which == "cyclic") return cyclic_subgroup(g, g.q() + 1);
  const auto all = subgroups_of_order(g, g.q() + 1);
  std::size_t idx = 0;
  try {
    idx = std::stoul(which);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::BadMode, "--s expects 'cyclic' or an index");
  }
  if (idx >= all.size())
    throw Error(ErrorKind::BadMode, "subgroup index " + which + " of " + std::to_string(all.size()));
  return all[idx];
}

struct Types {
  Subgroup s;
  DSearchResult search;
  std::vector<UnitalType> types;
};

Types affine_types(const ArGroup& ar, const std::string& which, std::uint64_t budget) {
  Types t;
  t.s = choose_subgroup(ar.group(), which);
  t.search = search_d_sets(ar.group(), t.s, {budget});
  if (!t.search.complete) throw Error(ErrorKind::Timeout, "D-set search budget exhausted");
  t.types = classify_unitals(ar, t.s, t.search.solutions);
  return t;
}

void print_fingerprint(std::ostream& out, std::size_t degree, const std::vector<Perm>& gens,
                       std::uint64_t order) {
  if (order > 5000) {
    out << "structure: order=" << order << " (fingerprint skipped above 5000)\n";
    return;
  }
  out << "structure: " << to_string(FiniteGroup(degree, gens).fingerprint()) << '\n';
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream s;
  s << '{';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << '}';
  return s.str();
}

}  // namespace

int field_info(const Options& o) {
  const Field f(o.p, o.e);
  std::cout << "field: GF(" << f.q() << ") = GF(" << f.p() << ")[x]/(" << (f.e() == 1 ? "x" : "x^" + std::to_string(f.e()));
  for (unsigned i = f.e(); i-- > 0;) {
    const unsigned c = f.modulus()[i];
    if (c == 0) continue;
    std::cout << " + ";
    if (c != 1 || i == 0) std::cout << c;
    if (i > 0) std::cout << (i == 1 ? "x" : "x^" + std::to_string(i));
  }
  std::cout << ")\n";
  std::cout << "generator: " << f.generator().code << '\n';
  std::cout << "squares:";
  for (std::uint32_t c = 0; c < f.q(); ++c)
    if (f.is_square(f.elem(c))) std::cout << ' ' << c;
  std::cout << '\n';
  if (f.has_half_subfield()) {
    std::cout << "subfield GF(" << f.subfield_order() << "):";
    for (std::uint32_t c = 0; c < f.q(); ++c)
      if (f.in_subfield(f.elem(c))) std::cout << ' ' << c;
    std::cout << '\n';
  }
  return kOk;
}

int group_info(const Options& o) {
  const auto g = group_for(o.q);
  const auto& sy = g->sylows();
  std::cout << "order: " << g->order() << '\n'
            << "sylow subgroups: " << sy.size() << " of order " << sy.front().order() << '\n'
            << "normalizer of sylow 0: " << g->normalizer(sy.front()).order() << '\n'
            << "short blocks: " << g->block_count() << '\n';
  for (std::size_t i = 0; i < sy.size(); ++i) std::cout << "sylow " << i << ": " << points(sy[i].members) << '\n';
  return kOk;
}

int unital_search(const Options& o) {
  const auto g = group_for(o.q);
  const ArGroup ar(*g);
  const auto t = affine_types(ar, o.subgroup, o.budget);
  std::cout << "S: " << points(t.s.members) << (is_cyclic(*g, t.s) ? " cyclic" : " non-cyclic") << '\n';
  std::cout << "solutions: " << t.search.solutions.size() << '\n';
  for (std::size_t i = 0; i < t.search.solutions.size(); ++i) {
    std::cout << "solution " << i << ":";
    for (const auto& d : t.search.solutions[i]) std::cout << ' ' << points(d);
    std::cout << '\n';
  }
  std::cout << "types: " << t.types.size() << '\n';
  for (std::size_t k = 0; k < t.types.size(); ++k) {
    const auto& ty = t.types[k];
    std::cout << "type " << k << ": aut=" << ty.aut_order << " members=" << join(ty.members)
              << (ty.classical ? " classical" : "") << '\n';
    if (!o.out_dir.empty()) {
      std::filesystem::create_directories(o.out_dir);
      const AffineUnital u(*g, t.s, t.search.solutions[ty.representative]);
      const auto path = std::filesystem::path(o.out_dir) /
                        ("unital_q" + std::to_string(o.q) + "_type" + std::to_string(k) + ".blocks");
      emit(path.string(), [&](std::ostream& out) { write_blocks(out, u.design()); });
    }
  }
  return kOk;
}

int para_gen(const Options& o) {
  const auto g = group_for(o.q);
  Parallelism pi;
  if (o.kind == "flat") pi = flat(*g);
  else if (o.kind == "natural") pi = natural(*g);
  else if (o.kind == "odd") pi = pi_odd(*g);
  else if (o.kind == "odd-prime") pi = pi_odd(*g, true);
  else if (o.kind == "sq") pi = pi_sq(*g);
  else if (o.kind == "sq-inv") pi = invert(*g, pi_sq(*g));
  else throw Error(ErrorKind::BadMode, "unknown kind " + o.kind);
  emit(o.out, [&](std::ostream& out) { write_para(out, *g, pi); });
  return kOk;
}

int para_verify(const Options& o) {
  auto in = open_in(o.files.at(0));
  const auto f = read_para(in);
  const auto g = group_for(f.q);
  const auto classes = resolve_classes(*g, f);
  const auto rep = verify_parallelism(*g, classes);
  if (rep.ok) {
    std::cout << "parallelism: ok\n";
    return kOk;
  }
  std::cout << "parallelism: FAIL " << rep.violation << '\n';
  for (BlockId b : rep.witness) std::cout << "witness block: " << points(g->block_points(b)) << '\n';
  if (rep.point) std::cout << "witness point: " << *rep.point << '\n';
  return kFailed;
}

int para_enum(const Options& o) {
  const auto g = group_for(o.q);
  const auto res = enumerate_parallelisms(*g, {o.budget, 0});
  std::cout << "spreads: " << res.spread_count << '\n'
            << "parallelisms: " << res.parallelisms.size() << '\n'
            << "complete: " << (res.complete ? "yes" : "no") << '\n';
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    for (std::size_t i = 0; i < res.parallelisms.size(); ++i) {
      std::ostringstream name;
      name << "para_q" << o.q << '_' << std::setw(4) << std::setfill('0') << i << ".para";
      emit((std::filesystem::path(o.out_dir) / name.str()).string(),
           [&](std::ostream& out) { write_para(out, *g, res.parallelisms[i]); });
    }
  }
  return res.complete ? kOk : kBudget;
}

int para_stab(const Options& o) {
  const auto g = group_for(para_q(o.files.at(0)));
  const ArGroup ar(*g);
  const auto pi = load_para(*g, o.files[0]);
  const auto stab = stabilizer(ar, pi);
  std::cout << "stabilizer order: " << stab.size() << '\n';
  std::vector<Perm> perms;
  for (const auto& t : stab) perms.push_back(ar.permutation(t));
  print_fingerprint(std::cout, g->order(), perms, stab.size());
  return kOk;
}

int para_orbits(const Options& o) {
  const auto g = group_for(para_q(o.files.at(0)));
  const ArGroup ar(*g);
  std::vector<ArElem> gens;
  if (o.group == "AR") {
    gens = ar_generators(ar);
  } else if (o.group == "autH" || o.group == "autE") {
    const auto t = affine_types(ar, "cyclic", 0);
    const std::size_t k = o.group == "autH" ? 0 : 1;
    if (k >= t.types.size()) throw Error(ErrorKind::BadMode, "only one affine type at this order");
    gens = aut_affine(ar, AffineUnital(*g, t.s, t.search.solutions[t.types[k].representative]));
  } else {
    throw Error(ErrorKind::BadMode, "--group expects autH, autE or AR");
  }
  std::vector<Parallelism> items;
  for (const auto& f : o.files) items.push_back(load_para(*g, f));
  std::vector<int> cls(items.size(), -1);
  auto report = nlohmann::ordered_json::array();
  int next = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (cls[i] >= 0) continue;
    const auto orb = orbit(ar, items[i], gens);
    cls[i] = next;
    for (std::size_t j = i + 1; j < items.size(); ++j)
      if (cls[j] < 0 && std::binary_search(orb.begin(), orb.end(), items[j])) cls[j] = next;
    std::vector<std::string> members;
    for (std::size_t j = i; j < items.size(); ++j)
      if (cls[j] == next) members.push_back(o.files[j]);
    if (o.json) {
      report.push_back({{"class", next}, {"orbit_length", orb.size()}, {"files", members}});
    } else {
      std::cout << "class " << next << ": orbit length " << orb.size() << ", files";
      for (const auto& m : members) std::cout << ' ' << m;
      std::cout << '\n';
    }
    ++next;
  }
  if (o.json) std::cout << nlohmann::ordered_json{{"group", o.group}, {"classes", report}}.dump(2) << '\n';
  return kOk;
}

int close_cmd(const Options& o) {
  const auto d = load_design(o.files.at(0));
  const auto g = group_for(affine_order(d.v));
  const auto u = AffineUnital::from_design(*g, d);
  const auto pi = load_para(*g, o.files.at(1));
  const auto c = close(u, pi);
  emit(o.out, [&](std::ostream& out) { write_blocks(out, c); });
  return kOk;
}

int design_verify(const Options& o) {
  const auto d = load_design(o.files.at(0));
  const auto rep = verify_design(d, o.n);
  if (rep.ok) {
    std::cout << "design: ok 2-(" << d.v << "," << o.n + 1 << ",1)\n";
    return kOk;
  }
  std::cout << "design: FAIL " << rep.violation << "\nwitness: " << join(rep.witness) << '\n';
  return kFailed;
}

int iso_aut(const Options& o) {
  const auto d = load_design(o.files.at(0));
  const auto r = automorphisms(d);
  std::cout << "order: " << r.order << '\n' << "generators: " << r.generators.size() << '\n';
  print_fingerprint(std::cout, d.v, r.generators, r.order);
  if (!o.out.empty()) {
    Design c{d.v, r.canonical_blocks, d.v};
    emit(o.out, [&](std::ostream& out) { write_blocks(out, c); });
  }
  return kOk;
}

int iso_cmp(const Options& o) {
  const auto a = load_design(o.files.at(0));
  const auto b = load_design(o.files.at(1));
  const auto f = isomorphism(a, b);
  if (!f) {
    std::cout << "not isomorphic\n";
    return kFailed;
  }
  std::cout << "isomorphic\nmap: " << join(*f) << '\n';
  return kOk;
}

int iso_blockfix(const Options& o) {
  const auto d = load_design(o.files.at(0));
  std::size_t b = 0;
  if (o.block == "last") {
    b = d.blocks.size() - 1;
  } else {
    try {
      b = std::stoul(o.block);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::BadMode, "--block expects 'last' or an index");
    }
  }
  if (b >= d.blocks.size()) throw Error(ErrorKind::BadMode, "block index out of range");
  const bool fixed = block_stabilizer_check(d, b);
  std::cout << "block " << b << ' ' << points(d.blocks[b]) << (fixed ? " fixed by all automorphisms\n" : " moved\n");
  return fixed ? kOk : kFailed;
}

int trans_report(const Options& o) {
  const auto d = load_design(o.files.at(0));
  const auto g = group_for(affine_order(d.v));
  if (g->q() < 3) throw Error(ErrorKind::BadMode, "algebraic path needs q >= 3; use 'trans all'");
  const ArGroup ar(*g);
  const auto u = AffineUnital::from_design(*g, d);
  const auto pi = load_para(*g, o.files.at(1));
  for (std::size_t s = 0; s < pi.class_count(); ++s) {
    const auto r = translations_at_infinity(ar, u, pi, s);
    std::cout << "center " << r.center << " (sylow " << s << "): order " << r.order
              << (r.is_translation_center ? " translation center" : "")
              << (r.semiregular ? "" : " NOT semiregular") << '\n';
  }
  return kOk;
}

int trans_all(const Options& o) {
  const auto d = load_design(o.files.at(0));
  const unsigned n = unital_order(d);
  const auto reports = all_translations(d, n);
  std::vector<Perm> nontrivial;
  for (const auto& r : reports) {
    std::cout << "center " << r.center << ": order " << r.order
              << (r.is_translation_center ? " translation center" : "")
              << (r.semiregular ? "" : " NOT semiregular") << '\n';
    for (const auto& m : r.members)
      if (!is_identity(m)) nontrivial.push_back(m);
  }
  std::cout << "nontrivial translations: " << nontrivial.size() << '\n';
  if (!nontrivial.empty()) print_fingerprint(std::cout, d.v, nontrivial, 0);
  return kOk;
}

int repro_counts(const Options& o) {
  const auto g = group_for(o.q);
  const auto res = enumerate_parallelisms(*g, {o.budget, 0});
  if (!res.complete) {
    std::cout << "parallelisms: budget exhausted after " << res.parallelisms.size() << '\n';
    return kBudget;
  }
  if (o.q != 4) {
    std::cout << "parallelisms: " << res.parallelisms.size() << " (no reference value)\n";
    return kOk;
  }
  const bool ok = res.parallelisms.size() == 182;
  std::cout << "parallelisms: " << res.parallelisms.size() << ' ' << verdict(ok) << '\n';
  return ok ? kOk : kFailed;
}

int repro_table1(const Options& o) {
  const OrderFour four({o.budget, 0});
  if (!four.complete()) return kBudget;
  const std::map<char, std::vector<std::size_t>> expected{{'H', {1, 1, 30, 25, 5, 60, 60}},
                                                          {'E', {1, 1, 24, 6, 20, 5, 5, 60, 60}}};
  bool all = true;
  for (char t : {'H', 'E'}) {
    std::vector<std::size_t> sizes;
    for (const auto& orb : four.orbits(t)) sizes.push_back(orb.size());
    auto a = sizes, b = expected.at(t);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::cout << "orbits " << t << ": " << join(sizes) << ' ' << verdict(a == b) << '\n';
    all = all && a == b;
  }
  return all ? kOk : kFailed;
}

int repro_table2(const Options& o) {
  const OrderFour four({o.budget, 0});
  if (!four.complete()) return kBudget;
  const std::vector<std::uint64_t> expected{40, 48, 240, 20, 20, 10, 40, 12, 48, 48, 4, 4};
  std::vector<std::uint64_t> got;
  for (const auto& l : four.leonids()) {
    got.push_back(l.aut.order);
    std::cout << l.name() << ": order " << l.aut.order << ", ";
    print_fingerprint(std::cout, l.design.v, l.aut.generators, l.aut.order);
  }
  const bool ok = got == expected;
  std::cout << "orders: " << join(got) << ' ' << verdict(ok) << '\n';
  return ok ? kOk : kFailed;
}

int repro_leonids(const Options& o) {
  const OrderFour four({o.budget, 0});
  if (!four.complete()) return kBudget;
  std::set<std::vector<std::vector<std::uint32_t>>> forms;
  for (const auto& c : four.closures()) forms.insert(c.aut.canonical_blocks);
  const bool types_ok = four.closures().size() == 16 && forms.size() == 16;
  std::cout << "isomorphism types: " << forms.size() << ' ' << verdict(types_ok) << '\n';
  bool rigid = true;
  for (const auto& l : four.leonids()) {
    const bool fixed = block_stabilizer_check(l.design, infinity_block(l.design));
    rigid = rigid && fixed;
    const auto tr = all_translations(l.design, 4);
    std::size_t count = 0;
    for (const auto& r : tr) count += r.order - 1;
    std::cout << l.name() << ": [inf] " << (fixed ? "fixed" : "moved") << ", nontrivial translations " << count
              << '\n';
  }
  std::cout << "block at infinity fixed: " << verdict(rigid) << '\n';
  return types_ok && rigid ? kOk : kFailed;
}

}  // namespace slu::cli
