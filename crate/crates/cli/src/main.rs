fn main() {
    println!("{}", perfband_core::geometry::probe_dense());
}
