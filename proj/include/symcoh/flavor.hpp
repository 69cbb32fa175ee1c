#pragma once

namespace symcoh {

/// The four cochain subcomplexes.
enum class Flavor { classical, normalized, symmetric, exterior };

}  // namespace symcoh
