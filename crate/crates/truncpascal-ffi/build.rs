extern crate cbindgen;

use std::env;
use std::path::Path;

fn main() {
    let crate_dir = env::var("CARGO_MANIFEST_DIR").unwrap();
    let header_path = Path::new(&crate_dir).join("include");

    let mut config = cbindgen::Config::default();
    config.language = cbindgen::Language::C;
    config.cpp_compat = true;
    config.include_guard = Some("TRUNCPASCAL_H".to_string());
    config.header = Some(
        "/* C interface to the truncpascal exact Pascal-matrix and Birkhoff toolkit.\n\
          * Handles are opaque; fallible calls return TpStatus and fill out\n\
          * parameters only on TP_STATUS_OK; strings returned through char ** are\n\
          * owned by the caller and released with tp_string_free. */"
            .to_string(),
    );
    config.enumeration.prefix_with_name = true;
    config.enumeration.rename_variants = cbindgen::RenameRule::ScreamingSnakeCase;

    cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
        .expect("Unable to generate C bindings")
        .write_to_file(header_path.join("truncpascal.h"));

    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=build.rs");
}
