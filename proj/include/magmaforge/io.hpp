#pragma once

#include <string>
#include <string_view>

#include "magmaforge/construct.hpp"
#include "magmaforge/groups.hpp"
#include "magmaforge/hypertournaments.hpp"
#include "magmaforge/magma.hpp"

namespace magmaforge {

// Text formats. Every writer ends with a newline and every reader throws
// ParseError on malformed input; readers accept what the writers emit.

/// `magma m n`, then m^(n-1) rows of m entries.
std::string write_magma(const FiniteMagma& a);
FiniteMagma read_magma(std::string_view text, const Limits& lim = Limits::standard());

/// `pointing m n`, then `u1 .. uk -> w` per k-set, by size then colex.
std::string write_pointing(const Pointing& p);
Pointing read_pointing(std::string_view text);

/// `htour m n`, edge lines as for pointings. Singleton edges may be left out
/// when reading.
std::string write_htour(const PointedHypertournament& t);
PointedHypertournament read_htour(std::string_view text);

/// `group m identity`, then m rows of the Cayley table.
std::string write_group(const FiniteGroup& g);
FiniteGroup read_group(std::string_view text);

/// `sign m n`, then `k: u1 .. uk` per class, sorted by (k, class key).
std::string write_sign(const SignFunction& lambda);
/// With `partial`, classes may be missing (used for seeds); otherwise the
/// result is validated against g.
SignFunction read_sign(std::string_view text, const FiniteGroup& g, bool partial = false);

/// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace magmaforge
