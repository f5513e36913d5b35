#include <CLI11.hpp>
#include <iostream>

#include "stringy/io.hpp"

using namespace stringy;

namespace {

struct Opts {
  std::string path;
  std::string format = "text";
  std::string what = "all";
  int bound = 10;
  int jobs = 1;  // accepted; output never depends on it
};

json rats(const std::vector<Rat>& v) {
  json a = json::array();
  for (auto& r : v) a.push_back(rat_json(r));
  return a;
}

std::string join(const std::vector<Rat>& v) {
  std::string s;
  for (auto& r : v) s += (s.empty() ? "" : ", ") + to_string(r);
  return "{" + s + "}";
}

std::string color_names(const std::vector<int>& c) {
  std::string s;
  for (int a : c) s += (s.empty() ? "" : ",") + std::string("a") + std::to_string(a + 1);
  return "{" + s + "}";
}

json index_json(const std::vector<int>& c) {
  json a = json::array();
  for (int x : c) a.push_back(x + 1);
  return a;
}

int cmd_validate(const Opts& o) {
  DivisorialFan f = load_fan(o.path);
  auto rep = validate_fan(f);
  if (o.format == "json") {
    std::cout << json{{"valid", rep.ok()}, {"violations", rep.violations}, {"assumptions", rep.assumptions}}.dump(2)
              << "\n";
  } else {
    std::cout << (rep.ok() ? "valid" : "invalid") << "\n";
    for (auto& v : rep.violations) std::cout << "violation: " << v << "\n";
    for (auto& a : rep.assumptions) std::cout << "assumption: " << a << "\n";
  }
  return rep.ok() ? 0 : 2;
}

int cmd_invariants(const Opts& o) {
  DivisorialFan f = load_fan(o.path);
  Engine e = prepare(f);
  if (!e.lt.ok) {
    std::string msg = "not log terminal:";
    for (auto& d : e.lt.details) msg += "\n  " + d;
    fail(ErrorKind::NotLogTerminal, msg);
  }
  StringyResult r = stringy_volume(f, e.omega);
  auto shortcut = euler_shortcut(f, e.omega);
  auto want = [&](const char* w) { return o.what == "all" || o.what == w; };

  if (o.format == "json") {
    json out;
    if (want("volume")) {
      if (r.volume) out["volume"] = series_json(*r.volume);
      out["tail_sum"] = series_json(r.tail_sum);
      json ps = json::object();
      for (auto& [y, s] : r.point_sums) ps[y] = series_json(s);
      out["point_sums"] = ps;
    }
    if (want("efunction")) out["efunction"] = motive_json(r.efunction);
    if (want("euler")) {
      out["e_st"] = r.e_st ? json(rat_json(*r.e_st)) : json(nullptr);
      if (shortcut) out["e_st_shortcut"] = rat_json(*shortcut);
    }
    if (want("poles")) {
      out["candidate_poles"] = rats(r.poles);
      out["remaining_poles"] = rats(r.remaining_poles);
    }
    out["m"] = r.m;
    out["assumptions"] = r.assumptions;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  bool tex = o.format == "latex";
  auto ser = [&](const LatticeSeries& s) { return tex ? latex_series(s) : s.str_L(); };
  auto rat = [&](const Rat& q) { return tex ? latex_rat(q) : to_string(q); };
  if (o.what == "euler") {
    std::cout << (r.e_st ? rat(*r.e_st) : std::string("pole")) << "\n";
  } else if (o.what == "poles") {
    std::cout << "candidate poles " << join(r.poles) << "\n";
    std::cout << "remaining poles " << join(r.remaining_poles) << "\n";
  } else {
    if (want("volume")) {
      std::cout << "formula: " << r.symbolic << "\n";
      std::cout << "S_tail = " << ser(r.tail_sum) << "\n";
      for (auto& [y, s] : r.point_sums) std::cout << "S_" << y << " = " << ser(s) << "\n";
      if (r.volume) {
        std::cout << "E_st = " << ser(*r.volume) << "\n";
        std::cout << "expansion up to L^-" << o.bound << ": "
                  << poly_str(r.volume->expand((long)o.bound * r.volume->m), "L", r.volume->m, true) << "\n";
      }
    }
    if (want("efunction")) std::cout << "E_st(u,v) = " << (tex ? latex_motive(r.efunction) : r.efunction.str()) << "\n";
    if (want("euler")) {
      std::cout << "e_st = " << (r.e_st ? rat(*r.e_st) : std::string("pole")) << "\n";
      if (shortcut) std::cout << "e_st (simplicial shortcut) = " << rat(*shortcut) << "\n";
    }
    if (want("poles")) {
      std::cout << "candidate poles " << join(r.poles) << "\n";
      std::cout << "remaining poles " << join(r.remaining_poles) << "\n";
    }
  }
  for (auto& a : r.assumptions) std::cout << "assumption: " << a << "\n";
  return 0;
}

std::string fan_str(const Fan& f) {
  std::string s;
  for (auto& c : f.maximal) s += "  " + c.str() + "\n";
  return s;
}

int cmd_resolve(const Opts& o) {
  DivisorialFan f = load_fan(o.path);
  Engine e = prepare(f);
  Resolution res = resolve(e);
  if (o.format == "json") {
    json ex = json::array();
    for (auto& x : res.exceptional)
      ex.push_back({{"kind", x.kind},
                    {"point", x.y},
                    {"nu", to_string(x.nu)},
                    {"l", x.l.get_str()},
                    {"discrepancy", rat_json(x.discrepancy)},
                    {"via_omega", rat_json(x.via_omega)}});
    json cen = json::array();
    for (auto& c : res.centers) cen.push_back(to_string(c));
    json tail = json::array();
    for (auto& c : res.tail.maximal) tail.push_back(c.str());
    json cay = json::object();
    for (auto& [y, fan] : res.cayley) {
      json a = json::array();
      for (auto& c : fan.maximal) a.push_back(c.str());
      cay[y] = a;
    }
    json lt = e.lt.details;
    std::cout << json{{"tail_fan", tail},     {"cayley_fans", cay},     {"centers", cen},
                      {"exceptional", ex},    {"log_terminal", e.lt.ok}, {"log_terminal_details", lt},
                      {"assumptions", e.omega.assumptions}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "refined tail fan:\n" << fan_str(res.tail);
  for (auto& [y, fan] : res.cayley) std::cout << "refined Cayley fan at " << y << ":\n" << fan_str(fan);
  std::cout << "centers:";
  for (auto& c : res.centers) std::cout << " " << to_string(c);
  std::cout << "\nexceptional divisors: " << res.exceptional.size() << "\n";
  for (auto& x : res.exceptional)
    std::cout << "  " << x.kind << " " << (x.l == 0 ? "" : x.y + " ") << to_string(x.nu) << " l=" << x.l.get_str()
              << " discrepancy " << to_string(x.discrepancy) << "\n";
  std::cout << "log terminal: " << (e.lt.ok ? "yes" : "no") << "\n";
  for (auto& d : e.lt.details) std::cout << "  " << d << "\n";
  for (auto& a : e.omega.assumptions) std::cout << "assumption: " << a << "\n";
  return 0;
}

int cmd_orbits(const Opts& o) {
  DivisorialFan f = load_fan(o.path);
  auto rep = validate_fan(f);
  if (!rep.ok()) fail(ErrorKind::Validation, "invalid input: " + rep.violations.front());
  auto orb = orbits(f);
  Rat e = euler_from_orbits(f);
  if (o.format == "json") {
    json a = json::array();
    for (auto& x : orb)
      a.push_back({{"kind", x.kind},
                   {"point", x.y},
                   {"face", x.face},
                   {"face_dim", x.face_dim},
                   {"colors", index_json(x.colors)},
                   {"torus_rank", x.torus_rank},
                   {"index", x.index.get_str()},
                   {"parabolic_I", index_json(x.flag_I)},
                   {"euler", rat_json(x.euler)}});
    std::cout << json{{"orbits", a}, {"euler", rat_json(e)}, {"assumptions", rep.assumptions}}.dump(2) << "\n";
    return 0;
  }
  for (auto& x : orb)
    std::cout << x.kind << " " << x.y << " face " << x.face << " dim " << x.face_dim << " colors "
              << color_names(x.colors) << " torus rank " << x.torus_rank << " index " << x.index.get_str()
              << " parabolic " << color_names(x.flag_I) << " euler " << to_string(x.euler) << "\n";
  std::cout << "euler characteristic " << to_string(e) << "\n";
  return 0;
}

int cmd_smoothness(const Opts& o) {
  DivisorialFan f = load_fan(o.path);
  auto rep = validate_fan(f);
  if (!rep.ok()) fail(ErrorKind::Validation, "invalid input: " + rep.violations.front());
  auto s = euler_and_smoothness(f);
  if (!s.applicable()) {
    std::string msg = "smoothness criterion does not apply:";
    for (auto& u : s.unmet) msg += "\n  " + u;
    fail(ErrorKind::Hypothesis, msg);
  }
  if (o.format == "json") {
    std::cout << json{{"e_st", rat_json(s.e_st)},
                      {"e_st_closed", rat_json(s.e_st_closed)},
                      {"e", rat_json(s.e)},
                      {"e_orbits", rat_json(s.e_orbits)},
                      {"inequality", s.inequality},
                      {"smooth", s.smooth},
                      {"assumptions", rep.assumptions}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "e_st = " << to_string(s.e_st) << " (closed form " << to_string(s.e_st_closed) << ")\n";
  std::cout << "e = " << to_string(s.e) << " (orbits " << to_string(s.e_orbits) << ")\n";
  std::cout << (s.smooth ? "smooth" : "singular") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stringy invariants of horospherical varieties of complexity one"};
  app.require_subcommand(1);
  Opts o;
  auto common = [&](CLI::App* c) {
    c->add_option("input", o.path, "input JSON file")->required();
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
    c->add_option("--bound", o.bound, "truncation bound")->check(CLI::PositiveNumber);
    c->add_option("--jobs", o.jobs, "parallelism hint")->check(CLI::PositiveNumber);
  };
  auto* v = app.add_subcommand("validate", "check the input");
  auto* inv = app.add_subcommand("invariants", "stringy volume, E-function, Euler characteristic, poles");
  auto* rs = app.add_subcommand("resolve", "resolution, centers and discrepancies");
  auto* ob = app.add_subcommand("orbits", "orbit table (single affine-locus divisor)");
  auto* sm = app.add_subcommand("smoothness", "Euler characteristic smoothness test");
  for (auto* c : {v, inv, rs, ob, sm}) common(c);
  inv->add_option("--what", o.what, "which invariant")
      ->check(CLI::IsMember({"all", "volume", "efunction", "euler", "poles"}));
  CLI11_PARSE(app, argc, argv);
  try {
    if (v->parsed()) return cmd_validate(o);
    if (inv->parsed()) return cmd_invariants(o);
    if (rs->parsed()) return cmd_resolve(o);
    if (ob->parsed()) return cmd_orbits(o);
    return cmd_smoothness(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
