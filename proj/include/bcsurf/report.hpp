#ifndef BCSURF_REPORT_HPP
#define BCSURF_REPORT_HPP

#include <ostream>
#include <stdexcept>
#include <string>

#include "bcsurf/checks.hpp"

namespace bcs {

enum class Format { Json, Csv, Table };

Format parse_format(const std::string& s);

struct ReportIOError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string to_json(const Report& r);
std::string to_csv(const Report& r);
std::string to_table(const Report& r);
std::string render(const Report& r, Format f);

// empty path: stdout
void emit(const Report& r, Format f, const std::string& path, std::ostream& out);

}  // namespace bcs

#endif
