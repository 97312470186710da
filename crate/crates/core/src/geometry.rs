//! Geometry of the periodicity cell, the truncated strip and finite windows,
//! rasterized to uniform-grid node masks.

/// Placeholder while probing dependencies.
pub struct CellSpec;
pub struct GridSpec;
pub struct StripSpec;
pub struct WindowSpec;
pub struct DomainMask;

pub fn probe_dense() -> f64 {
    use ndarray::array;
    use ndarray_linalg::Eigh;
    use num_complex::Complex64;
    let a = array![
        [Complex64::new(2.0, 0.0), Complex64::new(-1.0, 0.5)],
        [Complex64::new(-1.0, -0.5), Complex64::new(2.0, 0.0)]
    ];
    let (vals, _vecs) = a.eigh(ndarray_linalg::UPLO::Lower).unwrap();
    vals[0]
}
