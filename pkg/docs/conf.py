# sphinx configuration

extensions = ["sphinx.ext.napoleon"]
html_theme = "alabaster"
napoleon_google_docstring = True
napoleon_include_init_with_doc = True
napoleon_include_private_with_doc = True
project = "mfnet-core"
templates_path = ["."]
