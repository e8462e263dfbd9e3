#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "teeprobe/info_quantity.hpp"

namespace teeprobe {

/// I_n = sum_{k} (-1)^{k+1} sum_{|T|=k} S(T) over n parties (default labels
/// unless given). Throws InputError for n < 1.
InfoQuantity gen_multi_information(int n);
InfoQuantity gen_multi_information(const std::vector<std::string>& parties);

/// I_{m,n}: multi-information of the chosen parties, expressed over the
/// whole universe.
InfoQuantity gen_partial_multi_information(const std::vector<std::string>& chosen,
                                           const std::vector<std::string>& universe);

/// Cyclic quantity on 2m+1 parties:
///   sum_i S(a_i..a_{i+m}) - sum_i S(a_i..a_{i+m-1}) - S(a_1..a_{2m+1}).
InfoQuantity gen_cyclic(int party_count);

/// One of SA, MMI, KP, LW, Q61, Q62.
InfoQuantity gen_named(std::string_view name);

std::vector<std::string> named_quantity_names();

/// Resolves a command-line quantity reference: a generator shorthand
/// (SA, MMI, KP, LW, Q61, Q62, I<n>/In<n>, Q<2m+1>/cyclic<2m+1>) or DSL text.
InfoQuantity quantity_from_reference(std::string_view ref);

}  // namespace teeprobe
