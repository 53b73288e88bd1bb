use std::io;

use cymcm_core::Formulas;

fn main() {
    let code = cymcm::app::main_with(
        std::env::args_os(),
        &Formulas::STANDARD,
        &mut io::stdout(),
        &mut io::stderr(),
    );
    std::process::exit(code);
}
