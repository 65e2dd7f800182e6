//! The identity corpus, one file per part of the theory, in a stable order.

mod bernoulli;
mod pascal;
mod second_type;
mod special;
mod stirling;

use super::IdentitySpec;

pub(super) fn build() -> Vec<IdentitySpec> {
    let mut all = Vec::new();
    all.extend(pascal::specs());
    all.extend(bernoulli::specs());
    all.extend(stirling::specs());
    all.extend(second_type::specs());
    all.extend(special::specs());
    all
}
