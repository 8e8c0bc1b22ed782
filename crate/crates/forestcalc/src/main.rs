fn main() { forestcalc::cli::placeholder(); }
