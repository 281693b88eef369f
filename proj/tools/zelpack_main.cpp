#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zelpack/json_io.hpp"
#include "zelpack/packets.hpp"
#include "zelpack/parallel.hpp"

using nlohmann::json;
using namespace zelpack;

namespace {

// flag misuse, reported with the verb's grammar; data errors stay verbatim
struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::optional<int> d, a;
  int m = 1;
  std::vector<std::string> multisegments;
  std::vector<std::string> triangles;
  std::string support;
  int max = 0;
  int jobs = 0;
  std::string format = "json";
  std::string cache_dir;
};

json parse_doc(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(std::string(what) + ": not valid JSON");
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- enumeration cache ------------------------------------------------

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<RankTriangle> orbits_of(const Support& s, const std::string& cache_dir) {
  if (cache_dir.empty()) return enumerate_orbits(s);
  namespace fs = std::filesystem;
  fs::create_directories(cache_dir);
  std::ostringstream name;
  name << std::hex << fnv1a(to_json(s).dump()) << ".json";
  fs::path file = fs::path(cache_dir) / name.str();
  if (fs::exists(file)) {
    std::ifstream in(file);
    json doc = json::parse(in, nullptr, false);
    if (!doc.is_discarded() && doc.is_array()) {
      std::vector<RankTriangle> out;
      out.reserve(doc.size());
      for (const auto& item : doc) out.push_back(triangle_from_json(item));
      return out;
    }
    // unreadable entry: fall through and rewrite it
  }
  auto orbits = enumerate_orbits(s);
  json doc = json::array();
  for (const auto& t : orbits) doc.push_back(to_json(t));
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << doc.dump();
  }
  fs::rename(tmp, file);
  return orbits;
}

// ---- text rendering ----------------------------------------------------

std::string rank_list(const RankTriangle& t) {
  std::string out;
  for (const auto& row : t.rank_rows()) {
    if (!out.empty()) out += " / ";
    for (std::size_t p = 0; p < row.size(); ++p) {
      if (p) out += " ";
      out += std::to_string(row[p]);
    }
  }
  return out.empty() ? "-" : out;
}

void print_orbit_table(std::ostream& os, const std::vector<RankTriangle>& orbits,
                       const std::vector<char>* member, const RankTriangle* base) {
  std::vector<std::array<std::string, 3>> rows;
  std::size_t w0 = 12, w1 = 5;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    std::string mark;
    if (member) mark = (*member)[i] ? "member" : "";
    if (base && orbits[i] == *base) mark += mark.empty() ? "base" : " (base)";
    rows.push_back({triangle_to_multiseg(orbits[i]).str(), rank_list(orbits[i]), mark});
    w0 = std::max(w0, rows.back()[0].size());
    w1 = std::max(w1, rows.back()[1].size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size() + 2, ' ');
  };
  os << pad("multisegment", w0) << pad("ranks", w1) << "\n";
  for (const auto& r : rows)
    os << pad(r[0], w0) << pad(r[1], w1) << r[2] << "\n";
}

Support support_from_options(const Options& opt) {
  if (!opt.support.empty()) {
    if (opt.d || opt.a) throw UsageError("give either --support or --d/--a, not both");
    return support_from_json(parse_doc(opt.support, "--support"));
  }
  if (opt.d && opt.a) return infinitesimal_support(*opt.d, *opt.a);
  throw UsageError("need --support or both --d and --a");
}

// ---- verbs -------------------------------------------------------------

int run_convert(const Options& opt) {
  if (opt.multisegments.size() + opt.triangles.size() != 1)
    throw UsageError("convert needs exactly one of --multisegment or --triangle");
  if (!opt.multisegments.empty()) {
    RankTriangle t = multiseg_to_triangle(
        multisegment_from_json(parse_doc(opt.multisegments[0], "--multisegment")));
    if (opt.format == "text")
      std::cout << t.str() << "\n";
    else
      emit(to_json(t));
  } else {
    Multisegment a =
        triangle_to_multiseg(triangle_from_json(parse_doc(opt.triangles[0], "--triangle")));
    if (opt.format == "text")
      std::cout << a.str() << "\n";
    else
      emit(to_json(a));
  }
  return 0;
}

int run_dual(const Options& opt) {
  if (opt.multisegments.size() + opt.triangles.size() != 1)
    throw UsageError("dual needs exactly one of --multisegment or --triangle");
  if (!opt.multisegments.empty()) {
    Multisegment d =
        mw_dual(multisegment_from_json(parse_doc(opt.multisegments[0], "--multisegment")));
    if (opt.format == "text")
      std::cout << d.str() << "\n";
    else
      emit(to_json(d));
  } else {
    RankTriangle d =
        triangle_dual(triangle_from_json(parse_doc(opt.triangles[0], "--triangle")));
    if (opt.format == "text")
      std::cout << d.str() << "\n";
    else
      emit(to_json(d));
  }
  return 0;
}

int run_order(const Options& opt) {
  Multisegment a, b;
  if (opt.multisegments.size() == 2 && opt.triangles.empty()) {
    a = multisegment_from_json(parse_doc(opt.multisegments[0], "--multisegment"));
    b = multisegment_from_json(parse_doc(opt.multisegments[1], "--multisegment"));
  } else if (opt.triangles.size() == 2 && opt.multisegments.empty()) {
    a = triangle_to_multiseg(triangle_from_json(parse_doc(opt.triangles[0], "--triangle")));
    b = triangle_to_multiseg(triangle_from_json(parse_doc(opt.triangles[1], "--triangle")));
  } else {
    throw UsageError("order needs exactly two --multisegment or exactly two --triangle values");
  }
  Support s = support_of(a);
  RankTriangle ta = multiseg_to_triangle(a, s);
  RankTriangle tb = multiseg_to_triangle(b, s);  // SupportMismatch if b differs
  bool o_ab = leq_oracle(a, b), o_ba = leq_oracle(b, a);
  bool t_ab = leq_triangle(ta, tb), t_ba = leq_triangle(tb, ta);
  bool agree = o_ab == t_ab && o_ba == t_ba;
  std::string relation = o_ab && o_ba ? "equal"
                         : o_ab       ? "less"
                         : o_ba       ? "greater"
                                      : "incomparable";
  if (opt.format == "text") {
    std::cout << a.str() << " vs " << b.str() << ": " << relation
              << (agree ? "" : "  [oracle and triangle comparison disagree]") << "\n";
  } else {
    emit(json{{"relation", relation},
              {"oracle", {{"leq", o_ab}, {"geq", o_ba}}},
              {"triangle", {{"leq", t_ab}, {"geq", t_ba}}},
              {"agree", agree}});
  }
  if (!agree) {
    std::cerr << "error: order oracle and triangle comparison disagree (contiguity violation)\n";
    return 1;
  }
  return 0;
}

int run_stats(const Options& opt) {
  if (opt.multisegments.size() != 1) throw UsageError("stats needs exactly one --multisegment");
  MultisegmentStats st =
      stats(multisegment_from_json(parse_doc(opt.multisegments[0], "--multisegment")));
  if (opt.format == "text")
    std::cout << "L=" << st.longest << " n=" << st.count << " c=" << st.cover << "\n";
  else
    emit(json{{"L", st.longest}, {"n", st.count}, {"c", st.cover}});
  return 0;
}

int run_enumerate(const Options& opt) {
  Support s = support_from_options(opt);
  auto orbits = orbits_of(s, opt.cache_dir);
  if (opt.format == "text") {
    std::cout << "support " << s.str() << ": " << orbits.size() << " orbits\n";
    print_orbit_table(std::cout, orbits, nullptr, nullptr);
  } else {
    json jo = json::array(), jm = json::array();
    for (const auto& t : orbits) {
      jo.push_back(to_json(t));
      jm.push_back(to_json(triangle_to_multiseg(t)));
    }
    emit(json{{"support", to_json(s)},
              {"count", orbits.size()},
              {"orbits", std::move(jo)},
              {"multisegments", std::move(jm)}});
  }
  return 0;
}

int run_shape(const Options& opt) {
  VoganShape v = vogan_shape(support_from_options(opt));
  if (opt.format == "text") {
    std::cout << "support " << v.support.str() << "\n";
    std::cout << "dim V = " << v.dim_v << " (";
    for (std::size_t i = 0; i < v.hom_dims.size(); ++i)
      std::cout << (i ? " + " : "") << v.hom_dims[i];
    std::cout << ")\nH factors:";
    for (int h : v.h_factors) std::cout << " GL(" << h << ")";
    std::cout << "\n";
  } else {
    emit(to_json(v));
  }
  return 0;
}

int run_packet(const Options& opt) {
  RankTriangle base{Support{}};
  if (!opt.triangles.empty()) {
    if (opt.triangles.size() != 1 || opt.d || opt.a)
      throw UsageError("packet needs either --triangle or --d/--a");
    base = triangle_from_json(parse_doc(opt.triangles[0], "--triangle"));
  } else if (opt.d && opt.a) {
    auto red = hyper_unramify(ArthurParameter{opt.m, *opt.d, *opt.a, ""});
    base = multiseg_to_triangle(simple_arthur_multisegment(red.nr.d, red.nr.a));
  } else {
    throw UsageError("packet needs either --triangle or both --d and --a");
  }
  auto orbits = orbits_of(base.support(), opt.cache_dir);
  PrePacket pp = pre_packet(base, orbits);
  bool arthur_type = is_simple(triangle_to_multiseg(pp.base));
  if (opt.format == "text") {
    std::cout << (arthur_type ? "packet" : "pre-packet (upper bound)") << " of base "
              << triangle_to_multiseg(pp.base).str() << "\n";
    std::vector<char> member(orbits.size(), 0);
    for (std::size_t i = 0; i < orbits.size(); ++i)
      member[i] = std::find(pp.members.begin(), pp.members.end(), orbits[i]) != pp.members.end();
    print_orbit_table(std::cout, orbits, &member, &pp.base);
    std::cout << "singleton: " << (pp.singleton ? "yes" : "no") << "\n";
  } else {
    json j = to_json(pp);
    j["kind"] = arthur_type ? "packet" : "pre-packet (upper bound)";
    emit(j);
  }
  return pp.singleton || !arthur_type ? 0 : 1;
}

int run_verify_lemma(const Options& opt) {
  if (!opt.multisegments.empty()) {
    if (opt.multisegments.size() != 1 || !opt.support.empty())
      throw UsageError("verify-lemma needs one --multisegment or one --support");
    Multisegment alpha =
        multisegment_from_json(parse_doc(opt.multisegments[0], "--multisegment"));
    bool ok = verify_main_lemma(alpha);
    if (opt.format == "text")
      std::cout << alpha.str() << ": " << (ok ? "passes" : "FAILS") << "\n";
    else
      emit(json{{"multisegment", to_json(alpha)}, {"passes", ok}});
    return ok ? 0 : 1;
  }
  if (opt.support.empty()) throw UsageError("verify-lemma needs --multisegment or --support");
  Support s = support_from_json(parse_doc(opt.support, "--support"));
  int checked = 0, failed = 0;
  json results = json::array();
  for (const auto& alpha : enumerate_multisegments(s)) {
    if (!is_simple(alpha)) continue;
    ++checked;
    bool ok = verify_main_lemma(alpha);
    if (!ok) ++failed;
    if (opt.format == "text")
      std::cout << alpha.str() << ": " << (ok ? "passes" : "FAILS") << "\n";
    else
      results.push_back(json{{"multisegment", to_json(alpha)}, {"passes", ok}});
  }
  if (opt.format == "text")
    std::cout << checked << " simple multisegment(s) checked, " << failed << " failure(s)\n";
  else
    emit(json{{"support", to_json(s)},
              {"checked", checked},
              {"failed", failed},
              {"results", std::move(results)}});
  return failed == 0 ? 0 : 1;
}

int run_verify_theorem(const Options& opt) {
  if (!opt.d || !opt.a) throw UsageError("verify-theorem needs both --d and --a");
  ArthurParameter p{opt.m, *opt.d, *opt.a, ""};
  auto red = hyper_unramify(p);
  Support s = infinitesimal_support(red.nr.d, red.nr.a);
  RankTriangle base = multiseg_to_triangle(simple_arthur_multisegment(red.nr.d, red.nr.a));
  PrePacket pp = pre_packet(base, orbits_of(s, opt.cache_dir));
  bool ok = pp.singleton && red.reduced_rank * p.m == p.rank();
  if (opt.format == "text")
    std::cout << "m=" << p.m << " d=" << p.d << " a=" << p.a << " rank=" << p.rank()
              << " reduced=" << red.reduced_rank << " members=" << pp.members.size()
              << " singleton=" << (ok ? "yes" : "no") << "\n";
  else
    emit(json{{"parameter", to_json(p)},
              {"reduced_rank", red.reduced_rank},
              {"members", pp.members.size()},
              {"singleton", ok}});
  return ok ? 0 : 1;
}

int run_sweep(const Options& opt) {
  if (opt.max < 0) throw UsageError("sweep needs --max >= 0");
  bool all_ok = true;
  json rows = json::array();
  for (int d = 0; d <= opt.max; ++d)
    for (int a = 0; d + a <= opt.max; ++a) {
      Support s = infinitesimal_support(d, a);
      auto orbits = orbits_of(s, opt.cache_dir);
      PrePacket pp =
          pre_packet(multiseg_to_triangle(simple_arthur_multisegment(d, a)), orbits);
      all_ok = all_ok && pp.singleton;
      if (opt.format == "text")
        std::cout << "d=" << d << " a=" << a << " rank=" << s.total()
                  << " orbits=" << orbits.size() << " members=" << pp.members.size()
                  << " singleton=" << (pp.singleton ? "yes" : "no") << "\n";
      else
        rows.push_back(json{{"d", d},
                            {"a", a},
                            {"rank", s.total()},
                            {"orbits", orbits.size()},
                            {"members", pp.members.size()},
                            {"singleton", pp.singleton}});
    }
  if (opt.format == "text")
    std::cout << (all_ok ? "all singletons" : "NON-SINGLETON FOUND") << "\n";
  else
    emit(json{{"max", opt.max}, {"all_singletons", all_ok}, {"results", std::move(rows)}});
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multisegment and orbit combinatorics for p-adic general linear groups"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", opt.jobs, "thread count for parallel kernels");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    return cmd;
  };
  auto add_da = [&](CLI::App* cmd) {
    cmd->add_option("--d", opt.d, "first factor size minus one");
    cmd->add_option("--a", opt.a, "second factor size minus one");
    return cmd;
  };

  CLI::App* convert = add_common(app.add_subcommand(
      "convert", "convert between a multisegment and its rank triangle"));
  convert->add_option("--multisegment", opt.multisegments, "multisegment JSON");
  convert->add_option("--triangle", opt.triangles, "rank triangle JSON");

  CLI::App* dual = add_common(
      app.add_subcommand("dual", "Zelevinsky involution of a multisegment or triangle"));
  dual->add_option("--multisegment", opt.multisegments, "multisegment JSON");
  dual->add_option("--triangle", opt.triangles, "rank triangle JSON");

  CLI::App* order = add_common(app.add_subcommand(
      "order", "compare two multisegments or triangles in both characterizations"));
  order->add_option("--multisegment", opt.multisegments, "multisegment JSON (twice)");
  order->add_option("--triangle", opt.triangles, "rank triangle JSON (twice)");

  CLI::App* stats_cmd =
      add_common(app.add_subcommand("stats", "longest length, count, cover number"));
  stats_cmd->add_option("--multisegment", opt.multisegments, "multisegment JSON");

  CLI::App* enumerate = add_common(app.add_subcommand(
      "enumerate", "all orbits of a support with their multisegments"));
  add_da(enumerate);
  enumerate->add_option("--support", opt.support, "support JSON");
  enumerate->add_option("--cache", opt.cache_dir, "directory for cached enumerations");

  CLI::App* shape = add_common(app.add_subcommand(
      "shape", "dimensions of the variety and symmetry group of a support"));
  add_da(shape);
  shape->add_option("--support", opt.support, "support JSON");

  CLI::App* packet =
      add_common(app.add_subcommand("packet", "pre-packet of a base orbit"));
  add_da(packet);
  packet->add_option("--m", opt.m, "multiplicity of the cuspidal twist")
      ->check(CLI::PositiveNumber);
  packet->add_option("--triangle", opt.triangles, "base rank triangle JSON");
  packet->add_option("--cache", opt.cache_dir, "directory for cached enumerations");

  CLI::App* vlemma = add_common(app.add_subcommand(
      "verify-lemma", "check that no other orbit passes both pre-packet filters"));
  vlemma->add_option("--multisegment", opt.multisegments, "simple multisegment JSON");
  vlemma->add_option("--support", opt.support, "support JSON, checks every simple base");

  CLI::App* vthm = add_common(app.add_subcommand(
      "verify-theorem", "check that the staircase pre-packet is a singleton"));
  add_da(vthm);
  vthm->add_option("--m", opt.m, "multiplicity of the cuspidal twist")
      ->check(CLI::PositiveNumber);
  vthm->add_option("--cache", opt.cache_dir, "directory for cached enumerations");

  CLI::App* sweep = add_common(app.add_subcommand(
      "sweep", "verify-theorem over every d + a <= max"));
  sweep->add_option("--max", opt.max, "grid bound")->required();
  sweep->add_option("--cache", opt.cache_dir, "directory for cached enumerations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  set_jobs(opt.jobs);
  try {
    if (convert->parsed()) return run_convert(opt);
    if (dual->parsed()) return run_dual(opt);
    if (order->parsed()) return run_order(opt);
    if (stats_cmd->parsed()) return run_stats(opt);
    if (enumerate->parsed()) return run_enumerate(opt);
    if (shape->parsed()) return run_shape(opt);
    if (packet->parsed()) return run_packet(opt);
    if (vlemma->parsed()) return run_verify_lemma(opt);
    if (vthm->parsed()) return run_verify_theorem(opt);
    if (sweep->parsed()) return run_sweep(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const CLI::App* sub : app.get_subcommands())
      std::cerr << "\n" << sub->help();
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
