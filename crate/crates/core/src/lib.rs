//! Finite matroids given by their base families.
//!
//! The crate covers the set-family operators `Low`, `Max` and `Com`,
//! validated matroid construction from bases or independent sets, duality,
//! (unique) partition matroids, secondary bases and forming base families,
//! and decision procedures for unique expansion, unique exchange, union
//! minimal and intersection minimal matroids.
//!
//! ```
//! use matroidlab::{forming_family, is_unique_expansion, GroundSet, Matroid, SetFamily};
//!
//! let e = GroundSet::numbered(3).unwrap();
//! let bases = SetFamily::from_labels(&e, [["1", "2"], ["1", "3"]]).unwrap();
//! let m = Matroid::from_bases(bases).unwrap();
//! assert_eq!(forming_family(&m).unwrap().family().to_string(), "{{1},{2,3}}");
//! assert!(is_unique_expansion(&m).unwrap().holds);
//! ```

pub mod classify;
pub mod error;
pub mod forming;
pub mod matroid;
pub mod set;

pub use classify::{
    is_intersection_minimal, is_intersection_minimal_capped, is_transversal_of, is_union_minimal,
    is_union_minimal_capped, is_unique_exchange, is_unique_expansion, recover_partition,
    Classification, Witness, DEFAULT_SEARCH_CAP,
};
pub use error::{Error, Result};
pub use forming::{
    forming_family, forming_family_wrt, k_operator, secondary_bases, FormingFamily, FormingSource,
};
pub use matroid::{
    are_isomorphic, exchange_violation, make_partition_matroid, make_unique_partition_matroid,
    ExchangeViolation, Matroid, PartitionMatroidSpec,
};
pub use set::{
    com, combination_number, is_covering, is_partition, low, max, partitions_of, GroundSet,
    Partition, SetFamily, Subset, MAX_GROUND,
};
