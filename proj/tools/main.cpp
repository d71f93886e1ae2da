#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "monoidchar/char_equiv.hpp"
#include "monoidchar/class_functions.hpp"
#include "monoidchar/errors.hpp"
#include "monoidchar/galois.hpp"
#include "monoidchar/language.hpp"
#include "monoidchar/monoid.hpp"

using namespace monoidchar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNegative = 3;
constexpr int kExitInternal = 4;

std::vector<FieldSpec> parse_fields(const std::vector<std::string>& flags) {
  std::vector<FieldSpec> out;
  for (const auto& flag : flags) {
    std::stringstream ss(flag);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) out.push_back(FieldSpec::parse(item));
  }
  return out;
}

void print_partition(std::ostream& os, const EquivPartition& P) {
  for (const auto& cls : P.classes) {
    os << "class:";
    for (int m : cls) os << " " << m;
    os << "\n";
  }
  os << "classes: " << P.num_classes() << "\n";
}

int cmd_analyze_monoid(const std::string& path) {
  FiniteMonoid M = parse_monoid_file(path);
  std::cout << "size: " << M.size << "\n";
  std::cout << "identity: " << M.identity << "\n";
  std::vector<int> es = idempotents(M);
  std::cout << "idempotents:";
  for (int e : es) std::cout << " " << e;
  std::cout << "\n";
  std::vector<int> reps = d_class_idempotent_reps(M);
  std::cout << "d-class-reps:";
  for (int e : reps) std::cout << " " << e;
  std::cout << "\n";
  for (int e : reps) {
    GroupView G = maximal_subgroup(M, e);
    std::cout << "subgroup at " << e << ": order " << G.elements.size() << " {";
    for (size_t i = 0; i < G.elements.size(); ++i)
      std::cout << (i ? " " : "") << G.elements[i];
    std::cout << "}\n";
  }
  return kExitOk;
}

int cmd_char_classes(const std::string& path, const std::vector<FieldSpec>& fields,
                     const std::vector<int>& witness_pair) {
  FiniteMonoid M = parse_monoid_file(path);
  for (const auto& fs : fields) {
    std::cout << "field: " << fs.to_string() << "\n";
    if (witness_pair.size() == 2) {
      auto w = approx_test(M, fs, witness_pair[0], witness_pair[1]);
      if (w)
        std::cout << "witness: x=" << w->x << " y=" << w->y << " j=" << w->j << "\n";
      else
        std::cout << "witness: NONE\n";
    } else {
      print_partition(std::cout, equiv_closure(M, fs));
    }
  }
  return kExitOk;
}

int cmd_verify_characters(const std::string& path, const std::vector<FieldSpec>& fields) {
  FiniteMonoid M = parse_monoid_file(path);
  bool all_ok = true;
  for (const auto& fs : fields) {
    std::vector<std::pair<std::string, ClassFunction>> chars;
    chars.push_back({"right-regular", char_of_rep(right_regular_rep(M, fs))});
    if (M.has_transformations()) chars.push_back({"natural", natural_character(M, fs)});
    for (const auto& [name, chi] : chars) {
      auto violations = verify_character_identities(chi);
      if (violations.empty()) {
        std::cout << "PASS " << fs.to_string() << " " << name << "\n";
      } else {
        all_ok = false;
        std::cout << "FAIL " << fs.to_string() << " " << name << " ("
                  << violations.size() << " violations)\n";
        for (const auto& v : violations)
          std::cout << "  " << v.identity << " a=" << v.a << " b=" << v.b
                    << " j=" << v.j << "\n";
      }
    }
  }
  return all_ok ? kExitOk : kExitNegative;
}

int cmd_check_theorems(const std::string& path, const std::vector<FieldSpec>& fields) {
  FiniteMonoid M = parse_monoid_file(path);
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    all_ok = all_ok && ok;
  };
  for (const auto& fs : fields) {
    std::string tag = " [" + fs.to_string() + "]";
    EquivPartition closure = equiv_closure(M, fs);
    try {
      report("closure-vs-witness-partition" + tag,
             closure == partition_from_approx(M, fs));
    } catch (const NotTransitive& e) {
      report(std::string("closure-vs-witness-partition") + tag + " (" + e.what() + ")",
             false);
    }
    report("class-count-equals-irreducible-count" + tag,
           closure.num_classes() == irr_count(M, fs));
    try {
      psi_bijection(M, fs);
      report("group-to-monoid-class-bijection" + tag, true);
    } catch (const BijectionFailure& e) {
      report(std::string("group-to-monoid-class-bijection") + tag + " (" + e.what() + ")",
             false);
    }
    bool chars_ok =
        verify_character_identities(char_of_rep(right_regular_rep(M, fs))).empty();
    if (M.has_transformations())
      chars_ok = chars_ok && verify_character_identities(natural_character(M, fs)).empty();
    report("trace-identities" + tag, chars_ok);
  }
  return all_ok ? kExitOk : kExitNegative;
}

std::string format_counts(const std::vector<mpz_class>& counts) {
  std::string out;
  for (size_t i = 0; i < counts.size(); ++i)
    out += (i ? " " : "") + counts[i].get_str();
  return out;
}

int cmd_lang(const std::string& path, const std::vector<FieldSpec>& fields, int N,
             int dmax, bool json) {
  Dfa dfa = parse_dfa_file(path);
  ZetaReport rep = zeta_report(dfa, fields, N, dmax);

  if (json) {
    nlohmann::json j;
    j["monoid_size"] = rep.monoid_size;
    j["cyclic"] = rep.verdict.cyclic;
    if (!rep.verdict.cyclic) j["counterexample"] = rep.verdict.word_counterexample;
    j["word_counts"] = nlohmann::json::array();
    for (const auto& a : rep.series.word_counts) j["word_counts"].push_back(a.get_str());
    j["zeta_coefficients"] = nlohmann::json::array();
    for (const auto& c : rep.series.coefficients)
      j["zeta_coefficients"].push_back(c.get_str());
    if (rep.zeta) {
      j["zeta"]["numerator"] = rep.zeta->numerator.to_string();
      j["zeta"]["denominator"] = rep.zeta->denominator.to_string();
    } else {
      j["zeta"] = nullptr;
      j["undetermined"] = true;
    }
    j["certificates"] = nlohmann::json::array();
    for (size_t i = 0; i < rep.certificates.size(); ++i) {
      nlohmann::json c;
      c["field"] = rep.fields[i].to_string();
      c["restrictions"] = nlohmann::json::array();
      for (size_t k = 0; k < rep.certificates[i].d_class_reps.size(); ++k)
        c["restrictions"].push_back(
            {{"idempotent", rep.certificates[i].d_class_reps[k]},
             {"restriction", rep.certificates[i].restriction_trivial[k] ? "trivial" : "zero"}});
      j["certificates"].push_back(c);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "transition monoid size: " << rep.monoid_size << "\n";
    std::cout << "cyclic: " << (rep.verdict.cyclic ? "yes" : "no") << "\n";
    if (!rep.verdict.cyclic)
      std::cout << "counterexample: " << rep.verdict.word_counterexample << "\n";
    for (size_t i = 0; i < rep.certificates.size(); ++i) {
      std::cout << "certificate [" << rep.fields[i].to_string() << "]:";
      for (size_t k = 0; k < rep.certificates[i].d_class_reps.size(); ++k)
        std::cout << " G_" << rep.certificates[i].d_class_reps[k] << "="
                  << (rep.certificates[i].restriction_trivial[k] ? "trivial" : "zero");
      std::cout << "\n";
    }
    std::cout << "word counts: " << format_counts(rep.series.word_counts) << "\n";
    std::cout << "zeta coefficients:";
    for (const auto& c : rep.series.coefficients) std::cout << " " << c.get_str();
    std::cout << "\n";
    if (rep.zeta)
      std::cout << "zeta: " << rep.zeta->to_string() << "\n";
    else
      std::cout << "zeta: undetermined at dmax " << rep.dmax_used << "\n";
  }
  return rep.verdict.cyclic ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character equivalence of finite monoids and zeta functions of regular cyclic languages"};
  app.require_subcommand(1);

  std::vector<std::string> field_flags;
  std::string input_path;
  std::vector<int> witness_pair;
  int N = 16;
  int dmax = 0;
  bool json = false;

  auto add_fields = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--field", field_flags,
                                "field specs, comma separated (Q, F2, AC0, AC3, ...)");
    if (required) opt->required();
  };

  auto* analyze = app.add_subcommand("analyze-monoid", "structure report for a monoid file");
  analyze->add_option("input", input_path, "monoid file")->required();

  auto* classes = app.add_subcommand("char-classes", "character equivalence classes");
  classes->add_option("input", input_path, "monoid file")->required();
  add_fields(classes, true);
  classes->add_option("--witness", witness_pair, "two element indices to test")
      ->expected(2);

  auto* verify = app.add_subcommand("verify-characters", "check trace identities");
  verify->add_option("input", input_path, "monoid file")->required();
  add_fields(verify, true);

  auto* check = app.add_subcommand("check-theorems", "cross-check the structure theorems");
  check->add_option("input", input_path, "monoid file")->required();
  add_fields(check, true);

  auto* lang = app.add_subcommand("lang", "cyclicity and zeta pipeline for a DFA");
  lang->add_option("input", input_path, "DFA file")->required();
  add_fields(lang, false);
  lang->add_option("--order,-N", N, "series truncation order");
  lang->add_option("--dmax", dmax, "denominator degree bound (default: #states)");
  lang->add_flag("--json", json, "structured output");

  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<FieldSpec> fields = parse_fields(field_flags);
    if (analyze->parsed()) return cmd_analyze_monoid(input_path);
    if (classes->parsed()) return cmd_char_classes(input_path, fields, witness_pair);
    if (verify->parsed()) return cmd_verify_characters(input_path, fields);
    if (check->parsed()) return cmd_check_theorems(input_path, fields);
    if (lang->parsed()) return cmd_lang(input_path, fields, N, dmax, json);
  } catch (const NotTransitive& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return kExitInternal;
  } catch (const BijectionFailure& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return kExitInternal;
  } catch (const NotClassConstant& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
