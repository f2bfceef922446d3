// Command-line front end over the C interface in toric/toric.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "toric/toric.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInput = 2;

struct FanDeleter {
  void operator()(toric_fan* f) const { toric_fan_free(f); }
};
struct BundleDeleter {
  void operator()(toric_bundle* b) const { toric_bundle_free(b); }
};
struct StringDeleter {
  void operator()(char* s) const { toric_string_free(s); }
};
using FanPtr = std::unique_ptr<toric_fan, FanDeleter>;
using BundlePtr = std::unique_ptr<toric_bundle, BundleDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind with a specific exit status after printing a diagnostic.
struct Exit {
  int code;
};

int exit_code(toric_status s) { return static_cast<int>(s); }

[[noreturn]] void die(toric_status s, const std::string& context) {
  std::cerr << "error: " << context << ": " << toric_last_error() << '\n';
  throw Exit{exit_code(s)};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    throw Exit{kExitInput};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FanPtr load_fan(const std::string& path) {
  toric_fan* fan = nullptr;
  if (auto s = toric_fan_from_json(slurp(path).c_str(), &fan); s != TORIC_OK) die(s, path);
  return FanPtr(fan);
}

// Loads the fan and stops with exit 1 and the report if it is invalid.
FanPtr load_valid_fan(const std::string& path, toric_format format) {
  auto fan = load_fan(path);
  char* report = nullptr;
  const auto s = toric_fan_validate(fan.get(), format, &report);
  StringPtr owned(report);
  if (s == TORIC_INVALID) {
    std::cout << report;
    throw Exit{kExitInvalid};
  }
  if (s != TORIC_OK) die(s, path);
  return fan;
}

BundlePtr load_bundle(const toric_fan* fan, const std::string& path) {
  toric_bundle* bundle = nullptr;
  if (auto s = toric_bundle_from_json(fan, slurp(path).c_str(), &bundle); s != TORIC_OK) die(s, path);
  return BundlePtr(bundle);
}

template <typename Call>
void emit(Call&& call, const std::string& context) {
  char* text = nullptr;
  const toric_status s = call(&text);
  StringPtr owned(text);
  if (s != TORIC_OK) die(s, context);
  std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Chow ring and Chern class computations for equivariant vector bundles on smooth complete toric "
      "varieties.\n"
      "Ray indices are 0-based in JSON files and 1-based in human-readable text and monomials (x1*x2, x3^2).\n"
      "Exit status: 0 success, 1 invalid fan (report printed), 2 input or parse error, 3 internal error."};
  app.require_subcommand(1);

  std::string fan_path, bundle_path, monomial, example_name;
  std::string format_name = "text";
  int max_grade = -1;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* validate = app.add_subcommand("validate", "Check that a fan is smooth and complete");
  validate->add_option("--fan", fan_path, "Fan JSON file")->required();
  add_format(validate);

  auto* degree = app.add_subcommand("degree", "Intersection number of a top-grade monomial");
  degree->add_option("--fan", fan_path, "Fan JSON file")->required();
  degree->add_option("--monomial", monomial, "Monomial such as x1*x2 or x3^2 (1-based)")->required();

  auto* chern = app.add_subcommand("chern", "Newton classes, Chern classes and Chern character");
  auto* ch = app.add_subcommand("ch", "Chern character");
  auto* curves = app.add_subcommand("curves", "Restriction to invariant curves and semistability");
  for (auto* cmd : {chern, ch, curves}) {
    cmd->add_option("--fan", fan_path, "Fan JSON file")->required();
    cmd->add_option("--bundle", bundle_path, "Bundle JSON file (rows, characters or dtable model)")->required();
    add_format(cmd);
  }
  for (auto* cmd : {chern, ch})
    cmd->add_option("--max-grade", max_grade, "Highest grade to report (default: dimension)")
        ->check(CLI::NonNegativeNumber);

  auto* example = app.add_subcommand("example", "Print a built-in fan as JSON (P1 P2 P3 P1xP1 F1 F2)");
  example->add_option("name", example_name, "Example name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  const toric_format format = format_name == "json" ? TORIC_FORMAT_JSON : TORIC_FORMAT_TEXT;
  try {
    if (*validate) {
      auto fan = load_fan(fan_path);
      char* report = nullptr;
      const auto s = toric_fan_validate(fan.get(), format, &report);
      StringPtr owned(report);
      if (s != TORIC_OK && s != TORIC_INVALID) die(s, fan_path);
      std::cout << report;
      return exit_code(s);
    }
    if (*degree) {
      auto fan = load_valid_fan(fan_path, TORIC_FORMAT_TEXT);
      int64_t value = 0;
      if (auto s = toric_degree(fan.get(), monomial.c_str(), &value); s != TORIC_OK) die(s, "degree");
      std::cout << value << '\n';
      return kExitOk;
    }
    if (*example) {
      toric_fan* raw = nullptr;
      if (auto s = toric_fan_builtin(example_name.c_str(), &raw); s != TORIC_OK) die(s, "example");
      FanPtr fan(raw);
      emit([&](char** out) { return toric_fan_to_json(fan.get(), out); }, "example");
      std::cout << '\n';
      return kExitOk;
    }

    auto fan = load_valid_fan(fan_path, format);
    auto bundle = load_bundle(fan.get(), bundle_path);
    if (*chern)
      emit([&](char** out) { return toric_chern_report(fan.get(), bundle.get(), max_grade, format, out); }, "chern");
    else if (*ch)
      emit([&](char** out) { return toric_ch_report(fan.get(), bundle.get(), max_grade, format, out); }, "ch");
    else
      emit([&](char** out) { return toric_curves_report(fan.get(), bundle.get(), format, out); }, "curves");
    return kExitOk;
  } catch (const Exit& e) {
    return e.code;
  }
}
