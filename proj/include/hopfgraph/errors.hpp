#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfgraph {

enum class errc {
  dangling_endpoint,
  duplicate_id,
  non_positive_type,
  unknown_vertex,
  not_cycle_free,
  block_not_connected,
  not_a_partition,
  arity_out_of_range,
  not_a_hopf_algebra,
  unknown_law,
  syntax_error,
  bad_config,
};

class GraphError : public std::runtime_error {
public:
  GraphError(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

// Parser diagnostic; positions are 1-based.
class SyntaxError : public GraphError {
public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : GraphError(errc::syntax_error,
                   "line " + std::to_string(line) + ", col " +
                       std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hopfgraph
