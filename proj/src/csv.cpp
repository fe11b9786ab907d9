#include "cellmend/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <system_error>

namespace cellmend {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("csv: line " + std::to_string(line_no) + ": " +
                           what);
}

double parse_double(std::string_view field, std::size_t line_no) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || field.empty()) {
    fail(line_no, "not a number: '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buf, ptr);
}

std::string csv_header() {
  std::string h = "label";
  for (const char* name : kFeatureNames) {
    h += ',';
    h += name;
  }
  return h;
}

std::string to_csv(const Dataset& ds) {
  std::string out = csv_header();
  out += '\n';
  for (std::size_t i = 0; i < ds.size(); ++i) {
    out += std::to_string(ds.y[i]);
    for (double v : ds.x[i]) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

void save_csv(const Dataset& ds, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw std::runtime_error("csv: cannot open for writing: " + path.string());
  }
  const std::string text = to_csv(ds);
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) {
    throw std::runtime_error("csv: write failed: " + path.string());
  }
}

Dataset from_csv(const std::string& text) {
  Dataset ds;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;

    if (line_no == 1) {
      if (line != csv_header()) {
        fail(line_no, "bad header: '" + std::string(line) + "'");
      }
      continue;
    }
    if (line.empty()) continue;  // tolerate a trailing blank line

    std::array<std::string_view, kNumFeatures + 1> fields;
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string_view field =
          line.substr(start, comma == std::string_view::npos
                                 ? std::string_view::npos
                                 : comma - start);
      if (count < fields.size()) fields[count] = field;
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (count != kNumFeatures + 1) {
      fail(line_no, "expected " + std::to_string(kNumFeatures + 1) +
                        " fields, got " + std::to_string(count));
    }
    int label;
    if (fields[0] == "0") {
      label = kLabelFault;
    } else if (fields[0] == "1") {
      label = kLabelOk;
    } else {
      fail(line_no, "label must be 0 or 1, got '" + std::string(fields[0]) +
                        "'");
    }
    FeatureRow row;
    for (int k = 0; k < kNumFeatures; ++k) {
      row[static_cast<std::size_t>(k)] =
          parse_double(fields[static_cast<std::size_t>(k) + 1], line_no);
    }
    ds.push_back(row, label);
  }
  if (line_no == 0) {
    throw std::runtime_error("csv: empty input");
  }
  return ds;
}

Dataset load_csv(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    throw std::runtime_error("csv: cannot open: " + path.string());
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  return from_csv(ss.str());
}

}  // namespace cellmend
