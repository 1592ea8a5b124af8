# Maxwell Quasi-Trefftz Toolkit - Tests Package
